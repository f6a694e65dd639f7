//! Symbolic real scalars: rationals, named irrationals, elementary functions
//! and field operations over them.

use alloc::boxed::Box;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::fixed::Prec;
use crate::number::Sign;
use crate::rational::{self, Rational};

/// Analytic functions available on symbolic reals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Analytic {
    Sin,
    Cos,
    Exp,
    Log,
}

impl Analytic {
    pub fn name(self) -> &'static str {
        match self {
            Analytic::Sin => "sin",
            Analytic::Cos => "cos",
            Analytic::Exp => "exp",
            Analytic::Log => "log",
        }
    }
}

/// Symbolic real number.
///
/// Constructors normalize: rational subtrees collapse to [`SymReal::Rat`],
/// rational factors are pulled to the front of products, and like terms
/// `c₁·x + c₂·x` are combined.
#[derive(Clone, Debug, PartialEq)]
pub enum SymReal {
    Rat(Rational),
    Pi,
    E,
    /// `√k` for a positive rational `k` that is not a perfect square.
    Sqrt(Rational),
    Apply(Analytic, Box<SymReal>),
    Add(Box<SymReal>, Box<SymReal>),
    Mul(Box<SymReal>, Box<SymReal>),
    Inv(Box<SymReal>),
    Pow(Box<SymReal>, i64),
    /// A finite number in `[-1, 1]` whose center depends on the model, such
    /// as `sin(α^2)`. It has no numeric value.
    Bounded(String),
}

/// How a numeric decision was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Confidence {
    Exact,
    /// Decided by high-precision evaluation against the zero threshold.
    Numeric,
}

impl Confidence {
    pub fn and(self, other: Confidence) -> Confidence {
        if self == Confidence::Exact && other == Confidence::Exact {
            Confidence::Exact
        } else {
            Confidence::Numeric
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroTest {
    Zero(Confidence),
    NonZero(Confidence),
    /// Depends on a [`SymReal::Bounded`] atom or could not be evaluated.
    Undetermined,
}

/// Precision used for numeric decisions.
///
/// Values are evaluated with `digits` significant decimals; a value whose
/// magnitude is below `10^-(digits - 10)` is treated as zero. The defaults
/// (50 digits, threshold `10^-40`) leave ten digits of headroom for rounding
/// in the evaluation itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NumericConfig {
    pub digits: u32,
}

impl Default for NumericConfig {
    fn default() -> Self {
        NumericConfig { digits: 50 }
    }
}

impl NumericConfig {
    pub fn with_digits(digits: u32) -> Self {
        NumericConfig { digits: digits.max(15) }
    }

    fn prec(self) -> Prec {
        Prec::for_digits(self.digits)
    }

    fn threshold(self) -> Rational {
        let exp = self.digits.saturating_sub(10).max(5) as usize;
        Rational::new(BigInt::one(), num_traits::pow(BigInt::from(10), exp))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalError {
    /// Logarithm of a non-positive value or square root of a negative one.
    Domain,
    Pole,
    Overflow,
    /// The expression contains a bounded atom without an assignment.
    Bounded,
}

impl SymReal {
    pub fn zero() -> Self {
        SymReal::Rat(Rational::zero())
    }

    pub fn one() -> Self {
        SymReal::Rat(Rational::one())
    }

    pub fn int(n: i64) -> Self {
        SymReal::Rat(rational::int(n))
    }

    pub fn rational(r: Rational) -> Self {
        SymReal::Rat(r)
    }

    /// `√r`; `None` for negative `r`.
    pub fn sqrt(r: Rational) -> Option<Self> {
        if r.is_negative() {
            return None;
        }
        Some(match rational::exact_root(&r, 2) {
            Some(q) => SymReal::Rat(q),
            None => SymReal::Sqrt(r),
        })
    }

    pub fn bounded(text: impl Into<String>) -> Self {
        SymReal::Bounded(text.into())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            SymReal::Rat(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_exact_zero(&self) -> bool {
        matches!(self, SymReal::Rat(r) if r.is_zero())
    }

    pub fn has_bounded(&self) -> bool {
        match self {
            SymReal::Bounded(_) => true,
            SymReal::Rat(_) | SymReal::Pi | SymReal::E | SymReal::Sqrt(_) => false,
            SymReal::Apply(_, a) | SymReal::Inv(a) | SymReal::Pow(a, _) => a.has_bounded(),
            SymReal::Add(a, b) | SymReal::Mul(a, b) => a.has_bounded() || b.has_bounded(),
        }
    }

    /// Splits into a rational factor and the remaining non-rational factor.
    fn split(&self) -> (Rational, Option<&SymReal>) {
        match self {
            SymReal::Rat(r) => (r.clone(), None),
            SymReal::Mul(a, b) => match &**a {
                SymReal::Rat(c) => (c.clone(), Some(b)),
                _ => (Rational::one(), Some(self)),
            },
            _ => (Rational::one(), Some(self)),
        }
    }

    fn scaled(c: Rational, x: Option<&SymReal>) -> SymReal {
        match x {
            None => SymReal::Rat(c),
            Some(_) if c.is_zero() => SymReal::zero(),
            Some(x) if c.is_one() => x.clone(),
            Some(x) => SymReal::Mul(Box::new(SymReal::Rat(c)), Box::new(x.clone())),
        }
    }

    pub fn add(&self, other: &SymReal) -> SymReal {
        if let (SymReal::Rat(a), SymReal::Rat(b)) = (self, other) {
            return SymReal::Rat(a + b);
        }
        if self.is_exact_zero() {
            return other.clone();
        }
        if other.is_exact_zero() {
            return self.clone();
        }
        let (ca, xa) = self.split();
        let (cb, xb) = other.split();
        if xa.is_some() && xa == xb {
            return SymReal::scaled(ca + cb, xa);
        }
        SymReal::Add(Box::new(self.clone()), Box::new(other.clone()))
    }

    pub fn neg(&self) -> SymReal {
        let (c, x) = self.split();
        SymReal::scaled(-c, x)
    }

    pub fn sub(&self, other: &SymReal) -> SymReal {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &SymReal) -> SymReal {
        let (ca, xa) = self.split();
        let (cb, xb) = other.split();
        let c = ca * cb;
        if c.is_zero() {
            return SymReal::zero();
        }
        match (xa, xb) {
            (None, x) | (x, None) => SymReal::scaled(c, x),
            (Some(SymReal::Sqrt(p)), Some(SymReal::Sqrt(q))) if p == q => SymReal::Rat(c * p),
            (Some(x), Some(y)) => {
                let prod = SymReal::Mul(Box::new(x.clone()), Box::new(y.clone()));
                SymReal::scaled(c, Some(&prod))
            }
        }
    }

    /// Reciprocal; `None` only for a structural zero.
    pub fn recip(&self) -> Option<SymReal> {
        let (c, x) = self.split();
        if c.is_zero() {
            return None;
        }
        let inv_c = c.recip();
        Some(match x {
            None => SymReal::Rat(inv_c),
            Some(SymReal::Inv(inner)) => SymReal::scaled(inv_c, Some(inner)),
            Some(SymReal::Sqrt(k)) => {
                // 1/√k = √k / k
                SymReal::scaled(inv_c / k, Some(&SymReal::Sqrt(k.clone())))
            }
            Some(x) => SymReal::scaled(inv_c, Some(&SymReal::Inv(Box::new(x.clone())))),
        })
    }

    pub fn div(&self, other: &SymReal) -> Option<SymReal> {
        Some(self.mul(&other.recip()?))
    }

    pub fn powi(&self, k: i64) -> Option<SymReal> {
        if k < 0 {
            return self.recip()?.powi(-k);
        }
        Some(match (self, k) {
            (_, 0) => SymReal::one(),
            (_, 1) => self.clone(),
            (SymReal::Rat(r), k) => SymReal::Rat(num_traits::pow::Pow::pow(r, u32::try_from(k).ok()?)),
            (SymReal::Sqrt(r), k) if k % 2 == 0 => {
                SymReal::Rat(num_traits::pow::Pow::pow(r, u32::try_from(k / 2).ok()?))
            }
            _ => {
                let (c, x) = self.split();
                let c = num_traits::pow::Pow::pow(&c, u32::try_from(k).ok()?);
                let x = x.expect("non-rational");
                SymReal::scaled(c, Some(&SymReal::Pow(Box::new(x.clone()), k)))
            }
        })
    }

    /// Applies an analytic function, simplifying at `0` and `1` and for sin
    /// and cos at multiples of `π/6` and `π/4`.
    pub fn apply(f: Analytic, x: &SymReal) -> Result<SymReal, EvalError> {
        if let Some(q) = x.pi_multiple() {
            let shifted = match f {
                Analytic::Sin => Some(q),
                Analytic::Cos => Some(q + Rational::new(1.into(), 2.into())),
                _ => None,
            };
            if let Some(v) = shifted.and_then(|q| sin_pi(&q)) {
                return Ok(v);
            }
        }
        if let SymReal::Rat(r) = x {
            if r.is_zero() {
                match f {
                    Analytic::Sin => return Ok(SymReal::zero()),
                    Analytic::Cos | Analytic::Exp => return Ok(SymReal::one()),
                    Analytic::Log => return Err(EvalError::Domain),
                }
            }
            if f == Analytic::Log {
                if r.is_one() {
                    return Ok(SymReal::zero());
                }
                if r.is_negative() {
                    return Err(EvalError::Domain);
                }
            }
        }
        if let (Analytic::Exp, SymReal::Apply(Analytic::Log, inner)) = (f, x) {
            return Ok((**inner).clone());
        }
        Ok(SymReal::Apply(f, Box::new(x.clone())))
    }

    /// `q` when `self` is `q·π`.
    fn pi_multiple(&self) -> Option<Rational> {
        match self {
            SymReal::Pi => Some(Rational::one()),
            SymReal::Mul(a, b) => match (&**a, &**b) {
                (SymReal::Rat(q), SymReal::Pi) => Some(q.clone()),
                _ => None,
            },
            _ => None,
        }
    }

    /// Evaluates at precision `p`; bounded atoms take values from `assign`.
    pub fn eval_fixed(&self, p: Prec, assign: &dyn Fn(&str) -> Option<BigInt>) -> Result<BigInt, EvalError> {
        Ok(match self {
            SymReal::Rat(r) => p.from_rational(r),
            SymReal::Pi => p.pi(),
            SymReal::E => p.exp(&p.one()).ok_or(EvalError::Overflow)?,
            SymReal::Sqrt(r) => p.sqrt(&p.from_rational(r)).ok_or(EvalError::Domain)?,
            SymReal::Bounded(name) => assign(name).ok_or(EvalError::Bounded)?,
            SymReal::Add(a, b) => a.eval_fixed(p, assign)? + b.eval_fixed(p, assign)?,
            SymReal::Mul(a, b) => p.mul(&a.eval_fixed(p, assign)?, &b.eval_fixed(p, assign)?),
            SymReal::Inv(a) => {
                let v = a.eval_fixed(p, assign)?;
                p.div(&p.one(), &v).ok_or(EvalError::Pole)?
            }
            SymReal::Pow(a, k) => {
                let v = a.eval_fixed(p, assign)?;
                let mut acc = p.one();
                for _ in 0..k.unsigned_abs() {
                    acc = p.mul(&acc, &v);
                }
                if *k < 0 {
                    p.div(&p.one(), &acc).ok_or(EvalError::Pole)?
                } else {
                    acc
                }
            }
            SymReal::Apply(f, a) => {
                let v = a.eval_fixed(p, assign)?;
                match f {
                    Analytic::Sin => p.sin_cos(&v).0,
                    Analytic::Cos => p.sin_cos(&v).1,
                    Analytic::Exp => p.exp(&v).ok_or(EvalError::Overflow)?,
                    Analytic::Log => p.ln(&v).ok_or(EvalError::Domain)?,
                }
            }
        })
    }

    /// Numeric approximation as a rational with the configured precision.
    pub fn approximate(&self, cfg: NumericConfig) -> Result<Rational, EvalError> {
        if let SymReal::Rat(r) = self {
            return Ok(r.clone());
        }
        let p = cfg.prec();
        let m = self.eval_fixed(p, &|_| None)?;
        Ok(p.to_rational(&m))
    }

    pub fn zero_test(&self, cfg: NumericConfig) -> ZeroTest {
        if let SymReal::Rat(r) = self {
            return if r.is_zero() {
                ZeroTest::Zero(Confidence::Exact)
            } else {
                ZeroTest::NonZero(Confidence::Exact)
            };
        }
        let p = cfg.prec();
        let thr = p.from_rational(&cfg.threshold());
        if self.has_bounded() {
            // identically zero as a function of the bounded atoms?
            for trial in 0..3u64 {
                let assign = |name: &str| Some(p.from_rational(&pseudo_value(name, trial)));
                match self.eval_fixed(p, &assign) {
                    Ok(v) if v.abs() <= thr => continue,
                    _ => return ZeroTest::Undetermined,
                }
            }
            return ZeroTest::Zero(Confidence::Numeric);
        }
        match self.eval_fixed(p, &|_| None) {
            Ok(v) if v.abs() <= thr => ZeroTest::Zero(Confidence::Numeric),
            Ok(_) => ZeroTest::NonZero(Confidence::Numeric),
            Err(_) => ZeroTest::Undetermined,
        }
    }

    /// Sign, when it can be decided.
    pub fn sign(&self, cfg: NumericConfig) -> Option<(Sign, Confidence)> {
        if let SymReal::Rat(r) = self {
            return Some((Sign::of(r), Confidence::Exact));
        }
        if self.has_bounded() {
            return match self.zero_test(cfg) {
                ZeroTest::Zero(c) => Some((Sign::Zero, c)),
                _ => None,
            };
        }
        let p = cfg.prec();
        let thr = p.from_rational(&cfg.threshold());
        let v = self.eval_fixed(p, &|_| None).ok()?;
        Some((
            if v.abs() <= thr {
                Sign::Zero
            } else if v.is_positive() {
                Sign::Positive
            } else {
                Sign::Negative
            },
            Confidence::Numeric,
        ))
    }

    /// Double-precision value; `None` for bounded atoms or domain errors.
    pub fn to_f64(&self) -> Option<f64> {
        let v = match self {
            SymReal::Rat(r) => rational::to_f64(r),
            SymReal::Pi => core::f64::consts::PI,
            SymReal::E => core::f64::consts::E,
            SymReal::Sqrt(r) => libm::sqrt(rational::to_f64(r)),
            SymReal::Bounded(_) => return None,
            SymReal::Add(a, b) => a.to_f64()? + b.to_f64()?,
            SymReal::Mul(a, b) => a.to_f64()? * b.to_f64()?,
            SymReal::Inv(a) => 1.0 / a.to_f64()?,
            SymReal::Pow(a, k) => libm::pow(a.to_f64()?, *k as f64),
            SymReal::Apply(f, a) => {
                let x = a.to_f64()?;
                match f {
                    Analytic::Sin => libm::sin(x),
                    Analytic::Cos => libm::cos(x),
                    Analytic::Exp => libm::exp(x),
                    Analytic::Log => libm::log(x),
                }
            }
        };
        if v.is_finite() {
            Some(v)
        } else {
            None
        }
    }

    /// True when the value is provably irrational: `√k`, `π`, `e`, values of
    /// `sin`, `cos`, `exp` at nonzero rationals and `log` at positive
    /// rationals other than 1 (Lindemann–Weierstrass), and their sums with
    /// and nonzero multiples by rationals.
    pub fn is_known_irrational(&self) -> bool {
        match self {
            SymReal::Rat(_) | SymReal::Bounded(_) => false,
            SymReal::Pi | SymReal::E | SymReal::Sqrt(_) => true,
            SymReal::Apply(_, a) => matches!(&**a, SymReal::Rat(r) if !r.is_zero()),
            SymReal::Add(a, b) => {
                (a.as_rational().is_some() && b.is_known_irrational())
                    || (b.as_rational().is_some() && a.is_known_irrational())
            }
            SymReal::Mul(a, b) => match (&**a, &**b) {
                (SymReal::Rat(c), x) | (x, SymReal::Rat(c)) => !c.is_zero() && x.is_known_irrational(),
                _ => false,
            },
            SymReal::Inv(a) => a.is_known_irrational(),
            SymReal::Pow(a, k) => matches!(&**a, SymReal::Sqrt(_)) && k % 2 != 0,
        }
    }

    fn is_atomic(&self) -> bool {
        matches!(
            self,
            SymReal::Pi | SymReal::E | SymReal::Sqrt(_) | SymReal::Apply(..) | SymReal::Bounded(_)
        ) || matches!(self, SymReal::Rat(r) if r.is_integer() && !r.is_negative())
    }

    /// True when the rendering starts with a minus sign.
    fn renders_negative(&self) -> bool {
        match self {
            SymReal::Rat(r) => r.is_negative(),
            SymReal::Mul(a, _) => a.renders_negative(),
            _ => false,
        }
    }
}

/// Deterministic stand-in value in (-1, 1) for a bounded atom.
fn pseudo_value(name: &str, trial: u64) -> Rational {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ trial.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    for b in name.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    let frac = (h >> 11) as i64 % 1_000_003;
    Rational::new(BigInt::from(frac), BigInt::from(1_000_033))
}

fn write_factor(f: &mut fmt::Formatter<'_>, x: &SymReal) -> fmt::Result {
    if x.is_atomic() {
        write!(f, "{}", x)
    } else {
        write!(f, "({})", x)
    }
}

/// `sin(qπ)` when it has a closed form with a single square root.
fn sin_pi(q: &Rational) -> Option<SymReal> {
    let two = Rational::from_integer(2.into());
    // reduce to [0, 2), then to [0, 1) with a sign, then to [0, 1/2]
    let mut q = q - (q / &two).floor() * &two;
    let mut negative = false;
    if q >= Rational::one() {
        q -= Rational::one();
        negative = true;
    }
    if q > Rational::new(1.into(), 2.into()) {
        q = Rational::one() - q;
    }
    let half = SymReal::rational(Rational::new(1.into(), 2.into()));
    let value = match (q.numer().to_i64()?, q.denom().to_i64()?) {
        (0, _) => SymReal::zero(),
        (1, 6) => half,
        (1, 4) => half.mul(&SymReal::sqrt(two)?),
        (1, 3) => half.mul(&SymReal::sqrt(Rational::from_integer(3.into()))?),
        (1, 2) => SymReal::one(),
        _ => return None,
    };
    Some(if negative { value.neg() } else { value })
}

impl fmt::Display for SymReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymReal::Rat(r) => {
                if r.is_negative() {
                    write!(f, "−{}", -r)
                } else {
                    write!(f, "{}", r)
                }
            }
            SymReal::Pi => write!(f, "π"),
            SymReal::E => write!(f, "e"),
            SymReal::Sqrt(r) => {
                if r.is_integer() {
                    write!(f, "√{}", r)
                } else {
                    write!(f, "√({})", r)
                }
            }
            SymReal::Bounded(s) => write!(f, "{}", s),
            SymReal::Apply(g, a) => write!(f, "{}({})", g.name(), a),
            SymReal::Add(a, b) => {
                write!(f, "{}", a)?;
                if b.renders_negative() {
                    write!(f, " − {}", b.neg())
                } else {
                    write!(f, " + {}", b)
                }
            }
            SymReal::Mul(a, b) => match &**a {
                SymReal::Rat(c) if (-c).is_one() => {
                    write!(f, "−")?;
                    write_factor(f, b)
                }
                SymReal::Rat(c) if c.is_negative() => {
                    if c.is_integer() {
                        write!(f, "−{}·", -c)?;
                    } else {
                        write!(f, "−({})·", -c)?;
                    }
                    write_factor(f, b)
                }
                SymReal::Rat(c) if !c.is_integer() => {
                    write!(f, "({})·", c)?;
                    write_factor(f, b)
                }
                _ => {
                    write_factor(f, a)?;
                    write!(f, "·")?;
                    write_factor(f, b)
                }
            },
            SymReal::Inv(a) => {
                write!(f, "1/")?;
                write_factor(f, a)
            }
            SymReal::Pow(a, k) => {
                write_factor(f, a)?;
                write!(f, "^{}", k)
            }
        }
    }
}

impl crate::series::Coefficient for SymReal {
    fn zero() -> Self {
        SymReal::zero()
    }
    fn one() -> Self {
        SymReal::one()
    }
    fn is_zero(&self) -> bool {
        self.is_exact_zero()
    }
    fn add(&self, other: &Self) -> Self {
        SymReal::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        SymReal::mul(self, other)
    }
    fn neg(&self) -> Self {
        SymReal::neg(self)
    }
}

impl From<Rational> for SymReal {
    fn from(r: Rational) -> Self {
        SymReal::Rat(r)
    }
}

impl From<i64> for SymReal {
    fn from(n: i64) -> Self {
        SymReal::int(n)
    }
}

impl Add for &SymReal {
    type Output = SymReal;
    fn add(self, rhs: &SymReal) -> SymReal {
        SymReal::add(self, rhs)
    }
}

impl Sub for &SymReal {
    type Output = SymReal;
    fn sub(self, rhs: &SymReal) -> SymReal {
        SymReal::sub(self, rhs)
    }
}

impl Mul for &SymReal {
    type Output = SymReal;
    fn mul(self, rhs: &SymReal) -> SymReal {
        SymReal::mul(self, rhs)
    }
}

impl Div for &SymReal {
    type Output = SymReal;
    /// Panics on a structural zero divisor.
    fn div(self, rhs: &SymReal) -> SymReal {
        SymReal::div(self, rhs).expect("division by zero")
    }
}

impl Neg for &SymReal {
    type Output = SymReal;
    fn neg(self) -> SymReal {
        SymReal::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use alloc::string::ToString;

    fn sqrt2() -> SymReal {
        SymReal::sqrt(int(2)).unwrap()
    }

    #[test]
    fn sin_and_cos_at_multiples_of_pi() {
        let at = |f, p: i64, q: i64| {
            let x = SymReal::Pi.mul(&SymReal::rational(Rational::new(p.into(), q.into())));
            SymReal::apply(f, &x).unwrap()
        };
        assert_eq!(at(Analytic::Cos, 1, 1), SymReal::int(-1));
        assert_eq!(at(Analytic::Sin, 3, 1), SymReal::zero());
        assert_eq!(
            at(Analytic::Sin, -1, 6),
            SymReal::rational(Rational::new((-1).into(), 2.into()))
        );
        assert_eq!(at(Analytic::Cos, 1, 4).to_string(), "(1/2)·√2");
        assert_eq!(at(Analytic::Sin, 7, 3).to_string(), "(1/2)·√3");
        // no closed form attempted at π/5
        assert!(matches!(at(Analytic::Sin, 1, 5), SymReal::Apply(..)));
        // the closed forms agree with the numeric evaluation
        for (p, q) in [(1, 6), (5, 4), (-2, 3), (7, 2)] {
            let x = SymReal::Pi.mul(&SymReal::rational(Rational::new(p.into(), q.into())));
            let exact = SymReal::apply(Analytic::Sin, &x).unwrap();
            let numeric = SymReal::Apply(Analytic::Sin, Box::new(x));
            assert!((exact.to_f64().unwrap() - numeric.to_f64().unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn normalization() {
        let x = &SymReal::int(2) + &SymReal::rational(rat(1, 3));
        assert_eq!(x, SymReal::rational(rat(7, 3)));
        assert_eq!(&sqrt2() * &sqrt2(), SymReal::int(2));
        assert_eq!(SymReal::sqrt(rat(9, 4)), Some(SymReal::rational(rat(3, 2))));
        assert_eq!(SymReal::sqrt(int(-1)), None);
        let u = SymReal::bounded("sin(α^2)");
        assert!((&u - &u).is_exact_zero());
        assert_eq!(
            &(&u * &SymReal::int(3)) - &(&u * &SymReal::int(1)),
            &u * &SymReal::int(2)
        );
        assert_eq!(SymReal::apply(Analytic::Sin, &SymReal::zero()), Ok(SymReal::zero()));
        assert_eq!(SymReal::apply(Analytic::Log, &SymReal::int(-2)), Err(EvalError::Domain));
    }

    #[test]
    fn zero_tests() {
        let cfg = NumericConfig::default();
        // sin²(1) + cos²(1) − 1
        let one = SymReal::one();
        let s = SymReal::apply(Analytic::Sin, &one).unwrap();
        let c = SymReal::apply(Analytic::Cos, &one).unwrap();
        let z = &(&(&s * &s) + &(&c * &c)) - &one;
        assert_eq!(z.zero_test(cfg), ZeroTest::Zero(Confidence::Numeric));
        assert_eq!(sqrt2().zero_test(cfg), ZeroTest::NonZero(Confidence::Numeric));
        assert_eq!(SymReal::int(0).zero_test(cfg), ZeroTest::Zero(Confidence::Exact));
        let u = SymReal::bounded("sin(α^2)");
        assert_eq!(u.zero_test(cfg), ZeroTest::Undetermined);
        // u·√2 − √2·u is identically zero
        let w = SymReal::Add(
            alloc::boxed::Box::new(SymReal::Mul(
                alloc::boxed::Box::new(u.clone()),
                alloc::boxed::Box::new(sqrt2()),
            )),
            alloc::boxed::Box::new(SymReal::Mul(
                alloc::boxed::Box::new(SymReal::int(-1)),
                alloc::boxed::Box::new(SymReal::Mul(
                    alloc::boxed::Box::new(sqrt2()),
                    alloc::boxed::Box::new(u.clone()),
                )),
            )),
        );
        assert_eq!(w.zero_test(cfg), ZeroTest::Zero(Confidence::Numeric));
    }

    #[test]
    fn signs_and_values() {
        let cfg = NumericConfig::default();
        let x = &SymReal::Pi - &SymReal::rational(rat(22, 7));
        assert_eq!(x.sign(cfg).map(|s| s.0), Some(Sign::Negative));
        assert!((SymReal::E.to_f64().unwrap() - core::f64::consts::E).abs() < 1e-15);
        let r = sqrt2().approximate(cfg).unwrap();
        assert!((rational::to_f64(&r) - core::f64::consts::SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn irrationality() {
        assert!(sqrt2().is_known_irrational());
        assert!((&sqrt2() + &SymReal::int(1)).is_known_irrational());
        assert!((&sqrt2() * &SymReal::int(3)).is_known_irrational());
        assert!(!SymReal::int(3).is_known_irrational());
        assert!(!(&sqrt2() * &SymReal::Pi).is_known_irrational());
    }

    #[test]
    fn rendering() {
        assert_eq!((&sqrt2() * &SymReal::int(-2)).to_string(), "−2·√2");
        assert_eq!((&SymReal::Pi * &SymReal::rational(rat(1, 2))).to_string(), "(1/2)·π");
        assert_eq!((&SymReal::int(1) - &sqrt2()).to_string(), "1 − √2");
        assert_eq!(SymReal::rational(rat(-1, 3)).to_string(), "−1/3");
    }
}
