//! Exponents of the growth scale: a power of `2^α` and a power of `α`.

use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Exponent pair `(e2a, ea)` denoting the monomial `(2^α)^e2a · α^ea`.
///
/// The derived order is lexicographic with `e2a` first, so `2^α` dominates
/// every power of `α`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent {
    pub e2a: Rational,
    pub ea: Rational,
}

impl Exponent {
    pub fn new(e2a: Rational, ea: Rational) -> Self {
        Exponent { e2a, ea }
    }

    /// The neutral exponent `(0, 0)`.
    pub fn zero() -> Self {
        Exponent::new(Rational::zero(), Rational::zero())
    }

    /// `α^ea`.
    pub fn alpha_pow(ea: Rational) -> Self {
        Exponent::new(Rational::zero(), ea)
    }

    /// `(2^α)^e2a`.
    pub fn two_alpha_pow(e2a: Rational) -> Self {
        Exponent::new(e2a, Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.e2a.is_zero() && self.ea.is_zero()
    }

    /// Multiplies both components by `k` (the exponent of a power).
    pub fn scale(&self, k: &Rational) -> Self {
        Exponent::new(&self.e2a * k, &self.ea * k)
    }

    /// Positive exponents denote infinite monomials, negative ones
    /// infinitesimal monomials.
    pub fn is_positive(&self) -> bool {
        *self > Exponent::zero()
    }

    pub fn is_negative(&self) -> bool {
        *self < Exponent::zero()
    }

    pub fn is_one_alpha(&self) -> bool {
        self.e2a.is_zero() && self.ea.is_one()
    }
}

impl Add for &Exponent {
    type Output = Exponent;
    fn add(self, rhs: &Exponent) -> Exponent {
        Exponent::new(&self.e2a + &rhs.e2a, &self.ea + &rhs.ea)
    }
}

impl Sub for &Exponent {
    type Output = Exponent;
    fn sub(self, rhs: &Exponent) -> Exponent {
        Exponent::new(&self.e2a - &rhs.e2a, &self.ea - &rhs.ea)
    }
}

impl Neg for &Exponent {
    type Output = Exponent;
    fn neg(self) -> Exponent {
        Exponent::new(-&self.e2a, -&self.ea)
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, base: &str, p: &Rational) -> fmt::Result {
    if p.is_one() {
        write!(f, "{}", base)
    } else if p.is_integer() {
        write!(f, "{}^{}", base, p)
    } else {
        write!(f, "{}^({})", base, p)
    }
}

/// Renders the monomial part, e.g. `2^α·α^2`, `α^-1`, `α^(1/2)`, or `1` for
/// the neutral exponent.
impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "1");
        }
        let mut first = true;
        if !self.e2a.is_zero() {
            if self.e2a.is_one() {
                write!(f, "2^α")?;
            } else {
                write!(f, "2^({}·α)", self.e2a)?;
            }
            first = false;
        }
        if !self.ea.is_zero() {
            if !first {
                write!(f, "·")?;
            }
            write_power(f, "α", &self.ea)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn lexicographic_order() {
        let two_alpha = Exponent::two_alpha_pow(int(1));
        let big_alpha = Exponent::alpha_pow(int(1000));
        assert!(two_alpha > big_alpha);
        assert!(Exponent::alpha_pow(rat(1, 2)) > Exponent::zero());
        assert!(Exponent::new(int(-1), int(50)) < Exponent::alpha_pow(int(-3)));
    }

    #[test]
    fn render() {
        extern crate alloc;
        use alloc::string::ToString;
        assert_eq!(Exponent::new(int(1), int(2)).to_string(), "2^α·α^2");
        assert_eq!(Exponent::alpha_pow(int(-1)).to_string(), "α^-1");
        assert_eq!(Exponent::alpha_pow(rat(1, 2)).to_string(), "α^(1/2)");
        assert_eq!(Exponent::two_alpha_pow(int(2)).to_string(), "2^(2·α)");
    }
}
