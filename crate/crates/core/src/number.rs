//! Euclidean numbers: the fraction field of finite-support series in `α`
//! and `2^α` with rational coefficients.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exponent::Exponent;
use crate::rational::{self, Rational};
use crate::series::SeriesPoly;

/// Long-division cap used when a center has to be computed across several
/// `2^α` layers of the denominator.
const MAX_DIVISION_STEPS: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArithmeticError {
    DivisionByZero,
    /// The standard part was requested for an infinite number.
    NotFinite,
    Unsupported(String),
    /// The center has infinitely many terms at or above the neutral exponent.
    CenterNotRepresentable,
}

impl fmt::Display for ArithmeticError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithmeticError::DivisionByZero => write!(f, "division by zero"),
            ArithmeticError::NotFinite => write!(f, "not finite: the standard part is only defined for finite numbers"),
            ArithmeticError::Unsupported(what) => write!(f, "unsupported: {}", what),
            ArithmeticError::CenterNotRepresentable => write!(
                f,
                "center not representable: the expansion has infinitely many non-infinitesimal terms"
            ),
        }
    }
}

impl core::error::Error for ArithmeticError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Zero,
    InfinitesimalNonzero,
    FiniteNoninfinitesimal,
    Infinite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(r: &Rational) -> Sign {
        if r.is_zero() {
            Sign::Zero
        } else if r.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NumberClass {
    pub kind: Kind,
    pub sign: Sign,
}

impl fmt::Display for NumberClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            Kind::Zero => "zero",
            Kind::InfinitesimalNonzero => "infinitesimal-nonzero",
            Kind::FiniteNoninfinitesimal => "finite-noninfinitesimal",
            Kind::Infinite => "infinite",
        };
        let sign = match self.sign {
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Positive => "positive",
        };
        write!(f, "{}, {}", kind, sign)
    }
}

/// A single term `coefficient · (2^α)^e2a · α^ea` with nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub exponent: Exponent,
    pub coefficient: Rational,
}

impl Monomial {
    pub fn new(exponent: Exponent, coefficient: Rational) -> Option<Self> {
        if coefficient.is_zero() {
            None
        } else {
            Some(Monomial { exponent, coefficient })
        }
    }

    /// `α`.
    pub fn alpha() -> Self {
        Monomial {
            exponent: Exponent::alpha_pow(rational::int(1)),
            coefficient: Rational::one(),
        }
    }
}

/// Exact element of the field.
///
/// Stored as `num / den` with `den`'s leading term equal to `1·(0,0)`.
/// Equality is decided by cross-multiplication, so two values that denote the
/// same number compare equal regardless of representation.
#[derive(Clone, Debug)]
pub struct EuclideanNumber {
    num: SeriesPoly,
    den: SeriesPoly,
}

impl EuclideanNumber {
    pub fn zero() -> Self {
        EuclideanNumber {
            num: SeriesPoly::zero(),
            den: SeriesPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_series(SeriesPoly::constant(r))
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(rational::int(n))
    }

    pub fn from_series(num: SeriesPoly) -> Self {
        EuclideanNumber {
            num,
            den: SeriesPoly::one(),
        }
    }

    pub fn from_monomial(m: &Monomial) -> Self {
        Self::from_series(SeriesPoly::monomial(m.exponent.clone(), m.coefficient.clone()))
    }

    pub fn monomial(exponent: Exponent, coefficient: Rational) -> Self {
        Self::from_series(SeriesPoly::monomial(exponent, coefficient))
    }

    /// `α`, the numerosity of the positive integers.
    pub fn alpha() -> Self {
        Self::alpha_pow(rational::int(1))
    }

    /// `α^q` for rational `q`.
    pub fn alpha_pow(q: Rational) -> Self {
        Self::monomial(Exponent::alpha_pow(q), Rational::one())
    }

    /// `η = 1/α`.
    pub fn eta() -> Self {
        Self::alpha_pow(rational::int(-1))
    }

    /// `ω = α + 1`, the numerosity of the naturals.
    pub fn omega() -> Self {
        &Self::alpha() + &Self::one()
    }

    /// `2^α`.
    pub fn two_pow_alpha() -> Self {
        Self::monomial(Exponent::two_alpha_pow(rational::int(1)), Rational::one())
    }

    /// Builds `num / den` in canonical form.
    pub fn from_fraction(num: SeriesPoly, den: SeriesPoly) -> Result<Self, ArithmeticError> {
        if den.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: SeriesPoly, den: SeriesPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (lead_e, lead_c) = den.leading().expect("nonzero denominator");
        let shift = -lead_e;
        let inv = lead_c.recip();
        let num = num.mul_monomial(&shift, &inv);
        let den = den.mul_monomial(&shift, &inv);
        if den.len() > 1 {
            if let Some(q) = exact_quotient(&num, &den) {
                return Self::from_series(q);
            }
        }
        EuclideanNumber { num, den }
    }

    pub fn numerator(&self) -> &SeriesPoly {
        &self.num
    }

    pub fn denominator(&self) -> &SeriesPoly {
        &self.den
    }

    /// True when the denominator is `1`.
    pub fn is_series(&self) -> bool {
        self.den.len() == 1
    }

    /// The numerator when the denominator is `1`.
    pub fn as_series(&self) -> Option<&SeriesPoly> {
        if self.is_series() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.as_series().and_then(|s| s.as_constant())
    }

    pub fn as_monomial(&self) -> Option<Monomial> {
        let (e, c) = self.as_series()?.as_monomial()?;
        Monomial::new(e.clone(), c.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Exponent of the leading term of the expansion; `None` for zero.
    pub fn degree(&self) -> Option<&Exponent> {
        // den's leading exponent is (0,0) in canonical form
        self.num.leading().map(|(e, _)| e)
    }

    pub fn signum(&self) -> Sign {
        match self.num.leading() {
            None => Sign::Zero,
            Some((_, c)) => Sign::of(c),
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Sign::Negative {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Result<Self, ArithmeticError> {
        if self.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ArithmeticError> {
        if rhs.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        if rhs.is_series() {
            if let Some((e, c)) = rhs.num.as_monomial() {
                let inv = c.recip();
                return Ok(Self::normalized(self.num.mul_monomial(&-e, &inv), self.den.clone()));
            }
        }
        Ok(Self::normalized(self.num.mul(&rhs.den), self.den.mul(&rhs.num)))
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, k: i64) -> Result<Self, ArithmeticError> {
        if k < 0 {
            return self.recip()?.pow(-k);
        }
        if k == 0 {
            return Ok(Self::one());
        }
        let k = u32::try_from(k).map_err(|_| ArithmeticError::Unsupported(String::from("exponent too large")))?;
        if self.is_series() {
            return Ok(Self::from_series(self.num.pow(k)));
        }
        Ok(Self::normalized(self.num.pow(k), self.den.pow(k)))
    }

    /// Exact `k`-th root of a monomial value.
    pub fn root(&self, k: u32) -> Result<Self, ArithmeticError> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let m = self
            .as_monomial()
            .ok_or_else(|| ArithmeticError::Unsupported(String::from("root of a non-monomial")))?;
        monomial_root(&m, k)
    }

    pub fn classify(&self) -> NumberClass {
        match self.num.leading() {
            None => NumberClass {
                kind: Kind::Zero,
                sign: Sign::Zero,
            },
            Some((e, c)) => {
                let kind = match e.cmp(&Exponent::zero()) {
                    Ordering::Greater => Kind::Infinite,
                    Ordering::Less => Kind::InfinitesimalNonzero,
                    Ordering::Equal => Kind::FiniteNoninfinitesimal,
                };
                NumberClass {
                    kind,
                    sign: Sign::of(c),
                }
            }
        }
    }

    /// Zero counts as infinitesimal.
    pub fn is_infinitesimal(&self) -> bool {
        matches!(self.classify().kind, Kind::Zero | Kind::InfinitesimalNonzero)
    }

    pub fn is_finite(&self) -> bool {
        self.classify().kind != Kind::Infinite
    }

    pub fn is_infinite(&self) -> bool {
        self.classify().kind == Kind::Infinite
    }

    /// Standard part of a finite number: the coefficient of the neutral
    /// exponent in the expansion.
    pub fn st(&self) -> Result<Rational, ArithmeticError> {
        match self.num.leading() {
            None => Ok(Rational::zero()),
            Some((e, c)) => match e.cmp(&Exponent::zero()) {
                Ordering::Greater => Err(ArithmeticError::NotFinite),
                // den = 1 + (lower terms), so the first quotient term is c
                Ordering::Equal => Ok(c.clone()),
                Ordering::Less => Ok(Rational::zero()),
            },
        }
    }

    /// Center: the sum of all expansion terms with exponent `≥ (0,0)`.
    ///
    /// `self - ctr(self)` is always infinitesimal. For finite numbers this is
    /// the standard part.
    pub fn ctr(&self) -> Result<Self, ArithmeticError> {
        let zero = Exponent::zero();
        if self.is_series() {
            return Ok(Self::from_series(self.num.filter(|e| *e >= zero)));
        }
        if self.den.exponents().all(|e| e.e2a.is_zero()) {
            // Layers with positive 2^α power are entirely non-infinitesimal,
            // negative layers entirely infinitesimal. Only the α-only layer
            // needs dividing, and that division walks down a discrete set of
            // exponents to (0,0).
            let upper = self.num.filter(|e| e.e2a.is_positive());
            let middle = self.num.filter(|e| e.e2a.is_zero());
            let mut out = Self::normalized(upper, self.den.clone());
            if !middle.is_zero() {
                let q = divide_down_to(&middle, &self.den, &zero)?;
                out = &out + &Self::from_series(q);
            }
            return Ok(out);
        }
        Ok(Self::from_series(divide_down_to(&self.num, &self.den, &zero)?))
    }

    /// First `n` terms of the expansion in decreasing exponent order, or
    /// fewer if it terminates.
    pub fn expansion(&self, n: usize) -> SeriesPoly {
        let mut rem = self.num.clone();
        let mut q = SeriesPoly::zero();
        for _ in 0..n {
            let Some((e, c)) = rem.leading() else { break };
            let (e, c) = (e.clone(), c.clone());
            rem = rem.sub(&self.den.mul_monomial(&e, &c));
            q.add_term(e, c);
        }
        q
    }

    /// `a - b` is infinitesimal.
    pub fn same_monad(&self, other: &Self) -> bool {
        (self - other).is_infinitesimal()
    }

    /// `a - b` is finite.
    pub fn same_galaxy(&self, other: &Self) -> bool {
        (self - other).is_finite()
    }
}

/// Smallest and largest `e2a` and `ea` over the support.
fn support_box(s: &SeriesPoly) -> Option<[Rational; 4]> {
    let mut it = s.exponents();
    let first = it.next()?;
    let mut b = [first.e2a.clone(), first.e2a.clone(), first.ea.clone(), first.ea.clone()];
    for e in it {
        if e.e2a < b[0] {
            b[0] = e.e2a.clone();
        }
        if e.e2a > b[1] {
            b[1] = e.e2a.clone();
        }
        if e.ea < b[2] {
            b[2] = e.ea.clone();
        }
        if e.ea > b[3] {
            b[3] = e.ea.clone();
        }
    }
    Some(b)
}

/// `num / den` when the division is exact with finitely many quotient terms.
fn exact_quotient(num: &SeriesPoly, den: &SeriesPoly) -> Option<SeriesPoly> {
    let (den_lead, den_c) = den.leading()?;
    let (num_low, _) = num.trailing()?;
    let (den_low, _) = den.trailing()?;
    // an exact quotient's lowest term is num_low - den_low
    let bound = num_low - den_low;
    // the Newton polytope of num is the Minkowski sum of those of the
    // quotient and den, so each coordinate of a quotient exponent lies in
    // a box
    let (nb, db) = (support_box(num)?, support_box(den)?);
    let e2a_range = (&nb[0] - &db[0], &nb[1] - &db[1]);
    let ea_range = (&nb[2] - &db[2], &nb[3] - &db[3]);
    if e2a_range.0 > e2a_range.1 || ea_range.0 > ea_range.1 {
        return None;
    }
    let cap = 64 + 4 * num.len() * den.len();
    let mut rem = num.clone();
    let mut q = SeriesPoly::zero();
    for _ in 0..cap {
        let Some((re, rc)) = rem.leading() else {
            return Some(q);
        };
        let qe = re - den_lead;
        if qe < bound || qe.e2a < e2a_range.0 || qe.e2a > e2a_range.1 || qe.ea < ea_range.0 || qe.ea > ea_range.1 {
            return None;
        }
        let qc = rc / den_c;
        rem = rem.sub(&den.mul_monomial(&qe, &qc));
        q.add_term(qe, qc);
    }
    None
}

/// Quotient terms of `num / den` with exponent `≥ floor`. `den` must be
/// canonical (leading term `1·(0,0)`).
fn divide_down_to(num: &SeriesPoly, den: &SeriesPoly, floor: &Exponent) -> Result<SeriesPoly, ArithmeticError> {
    let mut rem = num.clone();
    let mut q = SeriesPoly::zero();
    for _ in 0..MAX_DIVISION_STEPS {
        let Some((e, c)) = rem.leading() else {
            return Ok(q);
        };
        if e < floor {
            return Ok(q);
        }
        let (e, c) = (e.clone(), c.clone());
        rem = rem.sub(&den.mul_monomial(&e, &c));
        q.add_term(e, c);
    }
    Err(ArithmeticError::CenterNotRepresentable)
}

/// `k`-th root of a monomial with a positive coefficient whose root is
/// rational.
pub fn monomial_root(m: &Monomial, k: u32) -> Result<EuclideanNumber, ArithmeticError> {
    if k == 0 {
        return Err(ArithmeticError::Unsupported(String::from("zeroth root")));
    }
    if !m.coefficient.is_positive() {
        return Err(ArithmeticError::Unsupported(String::from(
            "root of a monomial with non-positive coefficient",
        )));
    }
    let c = rational::exact_root(&m.coefficient, k)
        .ok_or_else(|| ArithmeticError::Unsupported(String::from("coefficient has an irrational root")))?;
    let inv = Rational::new(BigInt::one(), BigInt::from(k));
    Ok(EuclideanNumber::monomial(m.exponent.scale(&inv), c))
}

impl PartialEq for EuclideanNumber {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for EuclideanNumber {}

impl PartialOrd for EuclideanNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for EuclideanNumber {
    /// Sign of the leading coefficient of `n₁·d₂ − n₂·d₁`; both denominators
    /// have a positive leading coefficient.
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = if self.is_series() && other.is_series() {
            self.num.sub(&other.num)
        } else {
            self.num.mul(&other.den).sub(&other.num.mul(&self.den))
        };
        match diff.leading() {
            None => Ordering::Equal,
            Some((_, c)) if c.is_positive() => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }
}

impl From<Rational> for EuclideanNumber {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<i64> for EuclideanNumber {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl<'a> Add<&'a EuclideanNumber> for &'a EuclideanNumber {
    type Output = EuclideanNumber;
    fn add(self, rhs: &EuclideanNumber) -> EuclideanNumber {
        if self.is_series() && rhs.is_series() {
            return EuclideanNumber::from_series(self.num.add(&rhs.num));
        }
        if self.den == rhs.den {
            return EuclideanNumber::normalized(self.num.add(&rhs.num), self.den.clone());
        }
        EuclideanNumber::normalized(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl<'a> Sub<&'a EuclideanNumber> for &'a EuclideanNumber {
    type Output = EuclideanNumber;
    fn sub(self, rhs: &EuclideanNumber) -> EuclideanNumber {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a EuclideanNumber> for &'a EuclideanNumber {
    type Output = EuclideanNumber;
    fn mul(self, rhs: &EuclideanNumber) -> EuclideanNumber {
        if self.is_zero() || rhs.is_zero() {
            return EuclideanNumber::zero();
        }
        if self.is_series() && rhs.is_series() {
            return EuclideanNumber::from_series(self.num.mul(&rhs.num));
        }
        EuclideanNumber::normalized(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl<'a> Div<&'a EuclideanNumber> for &'a EuclideanNumber {
    type Output = EuclideanNumber;
    /// Panics on division by zero; see [`EuclideanNumber::checked_div`].
    fn div(self, rhs: &EuclideanNumber) -> EuclideanNumber {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &EuclideanNumber {
    type Output = EuclideanNumber;
    fn neg(self) -> EuclideanNumber {
        EuclideanNumber {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for EuclideanNumber {
            type Output = EuclideanNumber;
            fn $m(self, rhs: EuclideanNumber) -> EuclideanNumber {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for EuclideanNumber {
    type Output = EuclideanNumber;
    fn neg(self) -> EuclideanNumber {
        -&self
    }
}

/// Canonical rendering: terms in strictly decreasing exponent order, the
/// monomial first and the coefficient after it, e.g.
/// `2^α·3 + α^2·2 − 3 + α^-1·5`; fractions as `(…)/(…)`.
pub fn write_series(f: &mut fmt::Formatter<'_>, s: &SeriesPoly) -> fmt::Result {
    if s.is_zero() {
        return write!(f, "0");
    }
    for (i, (e, c)) in s.iter_desc().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => write!(f, "−")?,
            (0, false) => {}
            (_, true) => write!(f, " − ")?,
            (_, false) => write!(f, " + ")?,
        }
        let mag = c.abs();
        if e.is_zero() {
            write!(f, "{}", mag)?;
        } else if mag.is_one() {
            write!(f, "{}", e)?;
        } else {
            write!(f, "{}·{}", e, mag)?;
        }
    }
    Ok(())
}

struct SeriesDisplay<'a>(&'a SeriesPoly);

impl fmt::Display for SeriesDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_series(f, self.0)
    }
}

impl fmt::Display for EuclideanNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_series() {
            write_series(f, &self.num)
        } else {
            write!(f, "({})/({})", SeriesDisplay(&self.num), SeriesDisplay(&self.den))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use alloc::string::ToString;

    fn a() -> EuclideanNumber {
        EuclideanNumber::alpha()
    }
    fn eta() -> EuclideanNumber {
        EuclideanNumber::eta()
    }
    fn n(k: i64) -> EuclideanNumber {
        EuclideanNumber::from_integer(k)
    }
    fn q(p: i64, d: i64) -> EuclideanNumber {
        EuclideanNumber::from_rational(rat(p, d))
    }

    #[test]
    fn alpha_plus_one_is_omega() {
        assert_eq!(&a() + &n(1), EuclideanNumber::omega());
        assert_eq!(&a() + &EuclideanNumber::zero(), a());
        assert_eq!(&(&a() + &eta()) + &(&a() - &eta()), &n(2) * &a());
    }

    #[test]
    fn products() {
        let half = EuclideanNumber::alpha_pow(rat(1, 2));
        assert_eq!(&half * &half, a());
        let w = &a() + &n(1);
        let expected = &(&a().pow(2).unwrap() + &(&n(2) * &a())) + &n(1);
        assert_eq!(&w * &w, expected);
        assert_eq!(&a() * &eta(), n(1));
        assert_eq!(w.pow(2).unwrap(), expected);
        assert_eq!(w.pow(0).unwrap(), n(1));
    }

    #[test]
    fn division() {
        assert_eq!((&a() / &n(2)).to_string(), "α·1/2");
        let x = &a() + &q(1, 3);
        assert_eq!(&x / &n(1), x);
        assert_eq!(
            a().checked_div(&EuclideanNumber::zero()),
            Err(ArithmeticError::DivisionByZero)
        );
        // 1/(1+η) = 1 − η + η² − …
        let r = &n(1) / &(&n(1) + &eta());
        let exp = r.expansion(3);
        let e0 = Exponent::zero();
        assert_eq!(exp.coefficient(&e0), Some(&int(1)));
        assert_eq!(exp.coefficient(&Exponent::alpha_pow(int(-1))), Some(&int(-1)));
        assert_eq!(exp.coefficient(&Exponent::alpha_pow(int(-2))), Some(&int(1)));
        assert_eq!(r.ctr().unwrap(), n(1));
        let ratio = &(&a() + &eta()) / &(&a() + &eta());
        assert_eq!(ratio, n(1));
    }

    #[test]
    fn exact_quotients_collapse() {
        let num = &a().pow(2).unwrap() - &n(1);
        let den = &a() + &n(1);
        let x = &num / &den;
        assert!(x.is_series());
        assert_eq!(x, &a() - &n(1));
    }

    #[test]
    fn comparisons() {
        assert!(eta() < q(1, 1_000_000));
        let googol = EuclideanNumber::from_rational(Rational::from_integer(num_traits::pow(BigInt::from(10), 100)));
        assert!(a() > googol);
        assert!(EuclideanNumber::two_pow_alpha() > a().pow(1000).unwrap());
        assert!(-&a() < n(-5));
    }

    #[test]
    fn classification() {
        let c = (&eta().pow(2).unwrap() + &eta()).classify();
        assert_eq!(
            c,
            NumberClass {
                kind: Kind::InfinitesimalNonzero,
                sign: Sign::Positive
            }
        );
        let c = (&n(3) + &eta()).classify();
        assert_eq!(
            c,
            NumberClass {
                kind: Kind::FiniteNoninfinitesimal,
                sign: Sign::Positive
            }
        );
        assert_eq!(EuclideanNumber::omega().classify().kind, Kind::Infinite);
        assert_eq!(EuclideanNumber::zero().classify().kind, Kind::Zero);
        assert_eq!((-&a()).classify().sign, Sign::Negative);
    }

    #[test]
    fn standard_parts() {
        let x = &(&n(3) + &(&n(5) * &eta())) - &eta().pow(2).unwrap();
        assert_eq!(x.st(), Ok(int(3)));
        let y = &(&(&n(2) * &a()) + &n(1)) / &a();
        assert_eq!(y.st(), Ok(int(2)));
        assert_eq!(a().st(), Err(ArithmeticError::NotFinite));
        let z = &n(1) / &(&n(3) + &eta());
        assert_eq!(z.st(), Ok(rat(1, 3)));
    }

    #[test]
    fn centers() {
        let x = &(&a() + &q(1, 2)) + &eta();
        assert_eq!(x.ctr().unwrap(), &a() + &q(1, 2));
        let y = &a().pow(2).unwrap() / &(&a() + &n(1));
        assert_eq!(y.ctr().unwrap(), &a() - &n(1));
        let z = &n(7) / &(&n(2) + &eta());
        assert_eq!(z.ctr().unwrap(), q(7, 2));
        // 2^α/(1+η) has infinitely many terms above (0,0); all of it is center
        let w = &EuclideanNumber::two_pow_alpha() / &(&n(1) + &eta());
        assert_eq!(w.ctr().unwrap(), w);
        let v = &(&EuclideanNumber::two_pow_alpha() + &n(1)) / &(&n(1) + &eta());
        assert_eq!(v.ctr().unwrap(), &w + &n(1));
    }

    #[test]
    fn monads_and_galaxies() {
        assert!(n(1).same_monad(&(&n(1) + &eta())));
        assert!(!a().same_monad(&(&a() + &n(1))));
        assert!(a().same_galaxy(&(&a() + &n(1))));
        assert!(!a().same_galaxy(&(&n(2) * &a())));
    }

    #[test]
    fn roots() {
        let r = monomial_root(&Monomial::alpha(), 2).unwrap();
        assert_eq!(r, EuclideanNumber::alpha_pow(rat(1, 2)));
        assert_eq!(r.pow(2).unwrap(), a());
        let m = Monomial::new(Exponent::alpha_pow(int(3)), int(8)).unwrap();
        assert_eq!(monomial_root(&m, 3).unwrap(), &n(2) * &a());
        let m = Monomial::new(Exponent::alpha_pow(int(1)), int(2)).unwrap();
        assert!(matches!(monomial_root(&m, 2), Err(ArithmeticError::Unsupported(_))));
        assert!(matches!((&a() + &n(1)).root(2), Err(ArithmeticError::Unsupported(_))));
    }

    #[test]
    fn rendering() {
        let x = &(&(&(&EuclideanNumber::two_pow_alpha() * &n(3)) + &(&a().pow(2).unwrap() * &n(2))) - &n(3))
            + &(&eta() * &n(5));
        assert_eq!(x.to_string(), "2^α·3 + α^2·2 − 3 + α^-1·5");
        assert_eq!((-&a()).to_string(), "−α");
        let f = &n(1) / &(&a() + &n(1));
        assert_eq!(f.to_string(), "(α^-1)/(1 + α^-1)");
    }
}
