//! Ordinals below ε₀ in Cantor normal form with the natural (Hessenberg)
//! sum and product.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::number::EuclideanNumber;
use crate::rational::Rational;
use crate::series::SeriesPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrdinalError {
    /// The ordinal has an infinite exponent (it is at least ω^ω) and has no
    /// numerosity in the implemented field.
    UnsupportedOrdinal,
}

impl fmt::Display for OrdinalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrdinalError::UnsupportedOrdinal => {
                write!(f, "unsupported ordinal: only ordinals below ω^ω embed")
            }
        }
    }
}

impl core::error::Error for OrdinalError {}

/// `ω^e₁·c₁ + ω^e₂·c₂ + …` with `e₁ > e₂ > …` and every `cᵢ ≥ 1`; the empty
/// sum is `0`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Ordinal {
    terms: Vec<(Ordinal, BigUint)>,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_u64(1)
    }

    pub fn from_u64(n: u64) -> Self {
        Self::from_natural(BigUint::from(n))
    }

    pub fn from_natural(n: BigUint) -> Self {
        if n.is_zero() {
            Self::zero()
        } else {
            Ordinal {
                terms: alloc::vec![(Ordinal::zero(), n)],
            }
        }
    }

    pub fn omega() -> Self {
        Self::omega_pow(Ordinal::one())
    }

    /// `ω^e`.
    pub fn omega_pow(e: Ordinal) -> Self {
        Self::term(e, BigUint::one())
    }

    /// `ω^e·c`.
    pub fn term(e: Ordinal, c: BigUint) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Ordinal {
                terms: alloc::vec![(e, c)],
            }
        }
    }

    /// Builds a CNF from arbitrary `(exponent, coefficient)` pairs by natural
    /// summation, so order and repetition do not matter.
    pub fn from_terms(terms: impl IntoIterator<Item = (Ordinal, BigUint)>) -> Self {
        terms
            .into_iter()
            .fold(Self::zero(), |acc, (e, c)| acc.natural_sum(&Self::term(e, c)))
    }

    pub fn terms(&self) -> &[(Ordinal, BigUint)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value as a natural number, if the ordinal is finite.
    pub fn as_natural(&self) -> Option<BigUint> {
        match self.terms.as_slice() {
            [] => Some(BigUint::zero()),
            [(e, c)] if e.is_zero() => Some(c.clone()),
            _ => None,
        }
    }

    /// Hessenberg sum: merge the normal forms, adding coefficients of equal
    /// exponents.
    pub fn natural_sum(&self, other: &Ordinal) -> Ordinal {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ea, ca) = &self.terms[i];
            let (eb, cb) = &other.terms[j];
            match ea.cmp(eb) {
                Ordering::Greater => {
                    out.push((ea.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((eb.clone(), cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((ea.clone(), ca + cb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ordinal { terms: out }
    }

    /// Hessenberg product: `ω^p·m ⊗ ω^q·n = ω^(p⊕q)·mn`, distributed and
    /// recombined with [`Ordinal::natural_sum`].
    pub fn natural_prod(&self, other: &Ordinal) -> Ordinal {
        let mut acc = Ordinal::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                acc = acc.natural_sum(&Ordinal::term(ea.natural_sum(eb), ca * cb));
            }
        }
        acc
    }

    /// Embeds an ordinal below ω^ω: `ω^k·c ↦ c·(α+1)^k`.
    pub fn to_numerosity(&self) -> Result<EuclideanNumber, OrdinalError> {
        let omega = EuclideanNumber::omega();
        let mut acc = EuclideanNumber::zero();
        for (e, c) in &self.terms {
            let k = e
                .as_natural()
                .and_then(|k| k.to_i64())
                .ok_or(OrdinalError::UnsupportedOrdinal)?;
            let c = EuclideanNumber::from_rational(Rational::from_integer(BigInt::from(c.clone())));
            let power = omega.pow(k).map_err(|_| OrdinalError::UnsupportedOrdinal)?;
            acc = &acc + &(&c * &power);
        }
        Ok(acc)
    }

    /// Inverse of [`Ordinal::to_numerosity`]: `Some` exactly when `x` is a
    /// polynomial in `ω = α + 1` with nonnegative integer coefficients.
    pub fn from_numerosity(x: &EuclideanNumber) -> Option<Ordinal> {
        let coeffs = omega_coefficients(x)?;
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() || !c.is_integer() {
                return None;
            }
            let c = c.to_integer().to_biguint()?;
            terms.push((Ordinal::from_u64(k as u64), c));
        }
        Some(Ordinal { terms })
    }
}

/// Coefficients of `x` as a polynomial in `ω = α + 1`, lowest degree first.
/// `None` unless `x` is a polynomial in `α` with natural exponents.
pub fn omega_coefficients(x: &EuclideanNumber) -> Option<Vec<Rational>> {
    let s: &SeriesPoly = x.as_series()?;
    let mut alpha_coeffs: Vec<Rational> = Vec::new();
    for (e, c) in s.iter() {
        if !e.e2a.is_zero() || !e.ea.is_integer() || e.ea.is_negative() {
            return None;
        }
        let k = e.ea.to_integer().to_usize()?;
        if alpha_coeffs.len() <= k {
            alpha_coeffs.resize(k + 1, Rational::zero());
        }
        alpha_coeffs[k] = c.clone();
    }
    // substitute α = ω − 1 via Horner's scheme on coefficient vectors
    let mut acc: Vec<Rational> = Vec::new();
    for c in alpha_coeffs.iter().rev() {
        // acc ← acc·(ω − 1) + c
        let mut next = alloc::vec![Rational::zero(); acc.len() + 1];
        for (i, a) in acc.iter().enumerate() {
            next[i + 1] += a;
            next[i] -= a;
        }
        next[0] += c;
        acc = next;
    }
    while acc.last().is_some_and(|c| c.is_zero()) {
        acc.pop();
    }
    Some(acc)
}

/// True when `x` is the numerosity of some ordinal below ω^ω.
pub fn in_embedding_image(x: &EuclideanNumber) -> bool {
    Ordinal::from_numerosity(x).is_some()
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for ((ea, ca), (eb, cb)) in self.terms.iter().zip(&other.terms) {
            match ea.cmp(eb).then_with(|| ca.cmp(cb)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if e.is_zero() {
                write!(f, "{}", c)?;
                continue;
            }
            if e.as_natural().is_some_and(|k| k.is_one()) {
                write!(f, "ω")?;
            } else if e.as_natural().is_some() {
                write!(f, "ω^{}", e)?;
            } else {
                write!(f, "ω^({})", e)?;
            }
            if !c.is_one() {
                write!(f, "·{}", c)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn w() -> Ordinal {
        Ordinal::omega()
    }
    fn n(k: u64) -> Ordinal {
        Ordinal::from_u64(k)
    }
    fn wk(k: u64, c: u64) -> Ordinal {
        Ordinal::term(n(k), BigUint::from(c))
    }

    #[test]
    fn natural_sum_examples() {
        assert_eq!(n(1).natural_sum(&w()), w().natural_sum(&n(1)));
        assert_eq!(n(1).natural_sum(&w()).to_string(), "ω + 1");
        assert_eq!(n(0).natural_sum(&w()), w());
        let a = wk(1, 2).natural_sum(&n(3));
        let b = w().natural_sum(&n(5));
        assert_eq!(a.natural_sum(&b), wk(1, 3).natural_sum(&n(8)));
    }

    #[test]
    fn natural_prod_examples() {
        assert_eq!(w().natural_prod(&w()), wk(2, 1));
        assert_eq!(n(1).natural_prod(&wk(3, 4)), wk(3, 4));
        let w1 = w().natural_sum(&n(1));
        let expected = wk(2, 1).natural_sum(&wk(1, 2)).natural_sum(&n(1));
        assert_eq!(w1.natural_prod(&w1), expected);
    }

    #[test]
    fn comparisons() {
        assert!(w() > n(1_000_000));
        assert!(w().natural_sum(&n(1)) > w());
        assert!(wk(2, 1) > wk(1, 99).natural_sum(&n(99)));
        let ww = Ordinal::omega_pow(w());
        assert!(ww > wk(40, 7));
    }

    #[test]
    fn embedding() {
        let alpha = EuclideanNumber::alpha();
        assert_eq!(w().to_numerosity().unwrap(), &alpha + &EuclideanNumber::one());
        assert_eq!(n(5).to_numerosity().unwrap(), EuclideanNumber::from_integer(5));
        let x = wk(2, 2).natural_sum(&wk(1, 3)).natural_sum(&n(5));
        let a2 = alpha.pow(2).unwrap();
        let expected = &(&(&EuclideanNumber::from_integer(2) * &a2) + &(&EuclideanNumber::from_integer(7) * &alpha))
            + &EuclideanNumber::from_integer(10);
        assert_eq!(x.to_numerosity().unwrap(), expected);
        assert_eq!(
            Ordinal::omega_pow(w()).to_numerosity(),
            Err(OrdinalError::UnsupportedOrdinal)
        );
    }

    #[test]
    fn image() {
        let alpha = EuclideanNumber::alpha();
        assert!(!in_embedding_image(&alpha));
        assert!(in_embedding_image(&EuclideanNumber::omega()));
        let x = wk(3, 2).natural_sum(&n(4));
        assert_eq!(Ordinal::from_numerosity(&x.to_numerosity().unwrap()), Some(x));
        assert!(!in_embedding_image(&EuclideanNumber::eta()));
    }

    #[test]
    fn rendering() {
        let x = wk(2, 3).natural_sum(&wk(1, 2)).natural_sum(&n(1));
        assert_eq!(x.to_string(), "ω^2·3 + ω·2 + 1");
        assert_eq!(Ordinal::omega_pow(w()).to_string(), "ω^(ω)");
    }
}
