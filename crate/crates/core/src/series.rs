//! Finite-support series over the exponent group.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::exponent::Exponent;
use crate::rational::Rational;

/// Coefficient ring of a [`Series`].
pub trait Coefficient: Clone + fmt::Debug + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    /// Structural zero. Coefficients for which this is true are never stored.
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Coefficient for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Finite map `Exponent → C` without stored zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct Series<C: Coefficient> {
    terms: BTreeMap<Exponent, C>,
}

/// Series with rational coefficients.
pub type SeriesPoly = Series<Rational>;

impl<C: Coefficient> Default for Series<C> {
    fn default() -> Self {
        Series::zero()
    }
}

impl<C: Coefficient> Series<C> {
    pub fn zero() -> Self {
        Series { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Series::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Series::monomial(Exponent::zero(), c)
    }

    pub fn monomial(e: Exponent, c: C) -> Self {
        let mut s = Series::zero();
        s.add_term(e, c);
        s
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exponent, C)>) -> Self {
        let mut s = Series::zero();
        for (e, c) in terms {
            s.add_term(e, c);
        }
        s
    }

    /// Adds `c·e` in place, removing the entry if it cancels.
    pub fn add_term(&mut self, e: Exponent, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Term with the largest exponent.
    pub fn leading(&self) -> Option<(&Exponent, &C)> {
        self.terms.iter().next_back()
    }

    /// Term with the smallest exponent.
    pub fn trailing(&self) -> Option<(&Exponent, &C)> {
        self.terms.iter().next()
    }

    pub fn coefficient(&self, e: &Exponent) -> Option<&C> {
        self.terms.get(e)
    }

    /// Terms in decreasing exponent order.
    pub fn iter_desc(&self) -> impl Iterator<Item = (&Exponent, &C)> {
        self.terms.iter().rev()
    }

    /// Terms in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (&Exponent, &C)> {
        self.terms.iter()
    }

    pub fn exponents(&self) -> impl Iterator<Item = &Exponent> {
        self.terms.keys()
    }

    /// The single term, if the series is a monomial.
    pub fn as_monomial(&self) -> Option<(&Exponent, &C)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// The coefficient if the series is a constant (including zero).
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Exponent::zero()).cloned(),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Series {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.neg());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Series::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1.mul(c2));
            }
        }
        out
    }

    /// Multiplies by the monomial `c·e`.
    pub fn mul_monomial(&self, e: &Exponent, c: &C) -> Self {
        if c.is_zero() {
            return Series::zero();
        }
        let mut out = Series::zero();
        for (e1, c1) in &self.terms {
            out.add_term(e1 + e, c1.mul(c));
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        self.mul_monomial(&Exponent::zero(), c)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Series::one();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Keeps the terms whose exponent satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Exponent) -> bool) -> Self {
        Series {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coefficients<D: Coefficient>(&self, mut f: impl FnMut(&C) -> D) -> Series<D> {
        Series::from_terms(self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    pub fn into_terms(self) -> Vec<(Exponent, C)> {
        self.terms.into_iter().collect()
    }
}

impl Series<Rational> {
    /// Substitutes a polynomial argument into `Σ cᵢ·Xⁱ`, coefficients in
    /// increasing degree.
    pub fn compose_polynomial(coeffs: &[Rational], x: &SeriesPoly) -> SeriesPoly {
        let mut acc = SeriesPoly::zero();
        for c in coeffs.iter().rev() {
            acc = acc.mul(x);
            acc.add_term(Exponent::zero(), c.clone());
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn a(k: i64) -> Exponent {
        Exponent::alpha_pow(int(k))
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = SeriesPoly::from_terms([(a(1), int(1)), (a(0), int(1))]);
        let q = SeriesPoly::from_terms([(a(1), int(1)), (a(0), int(-1))]);
        let d = p.sub(&q);
        assert_eq!(d, SeriesPoly::monomial(a(0), int(2)));
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn binomial_square() {
        let p = SeriesPoly::from_terms([(a(1), int(1)), (a(0), int(1))]);
        let sq = p.pow(2);
        assert_eq!(
            sq,
            SeriesPoly::from_terms([(a(2), int(1)), (a(1), int(2)), (a(0), int(1))])
        );
        assert_eq!(sq.leading().unwrap().0, &a(2));
        assert_eq!(sq.trailing().unwrap().0, &a(0));
    }
}
