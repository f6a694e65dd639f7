//! Binary fixed-point arithmetic on big integers, used to evaluate symbolic
//! reals numerically.
//!
//! A value `v` at precision `p` is the integer `m ≈ v·2^p`. Every primitive
//! below returns a result within a few units of `2^-p` of the exact value for
//! arguments of moderate size (it works internally with extra guard bits and
//! truncates at the end); composite expressions can lose accuracy to
//! cancellation or ill-conditioning, which is why callers request more digits
//! than they trust.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::Rational;

const GUARD: u32 = 32;

/// Largest magnitude accepted by `exp` (in units of the argument).
const EXP_LIMIT: i64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Prec {
    pub bits: u32,
}

impl Prec {
    /// Working precision for roughly `digits` significant decimals.
    pub fn for_digits(digits: u32) -> Self {
        Prec {
            bits: digits.saturating_mul(3322).div_ceil(1000) + 16,
        }
    }

    fn with_guard(self, extra: u32) -> Prec {
        Prec {
            bits: self.bits + extra,
        }
    }

    pub fn one(self) -> BigInt {
        BigInt::one() << self.bits
    }

    pub fn from_int(self, n: i64) -> BigInt {
        BigInt::from(n) << self.bits
    }

    pub fn from_rational(self, r: &Rational) -> BigInt {
        (r.numer() << self.bits).div_floor(r.denom())
    }

    pub fn to_rational(self, m: &BigInt) -> Rational {
        Rational::new(m.clone(), BigInt::one() << self.bits)
    }

    pub fn to_f64(self, m: &BigInt) -> f64 {
        num_traits::ToPrimitive::to_f64(&self.to_rational(m)).unwrap_or(f64::NAN)
    }

    pub fn mul(self, a: &BigInt, b: &BigInt) -> BigInt {
        (a * b) >> self.bits
    }

    pub fn div(self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        if b.is_zero() {
            None
        } else {
            Some((a << self.bits).div_floor(b))
        }
    }

    fn raise(self, m: &BigInt, to: Prec) -> BigInt {
        m << (to.bits - self.bits)
    }

    fn lower(self, m: &BigInt, to: Prec) -> BigInt {
        m >> (self.bits - to.bits)
    }

    pub fn sqrt(self, x: &BigInt) -> Option<BigInt> {
        if x.is_negative() {
            return None;
        }
        Some((x << self.bits).sqrt())
    }

    /// `atan(1/n)` for integer `n ≥ 2`.
    fn atan_inv(self, n: u64) -> BigInt {
        let n = BigInt::from(n);
        let n2 = &n * &n;
        let mut term = self.one() / &n;
        let mut sum = term.clone();
        let mut k: u64 = 1;
        while !term.is_zero() {
            term = -term / &n2;
            sum += &term / BigInt::from(2 * k + 1);
            k += 1;
        }
        sum
    }

    pub fn pi(self) -> BigInt {
        let w = self.with_guard(GUARD);
        let pi = w.atan_inv(5) * 16 - w.atan_inv(239) * 4;
        w.lower(&pi, self)
    }

    pub fn exp(self, x: &BigInt) -> Option<BigInt> {
        if x.is_negative() {
            let pos = self.exp(&-x)?;
            return self.div(&self.one(), &pos);
        }
        let int_part = (x >> self.bits).to_i64()?;
        if int_part > EXP_LIMIT {
            return None;
        }
        // halve until the argument is below 2^-8, then square back; each
        // squaring doubles the relative error
        let halvings = (64 - (int_part as u64).leading_zeros()) + 8;
        let w = self.with_guard(GUARD + halvings);
        let y = self.raise(x, w) >> halvings;
        let one = w.one();
        let mut term = one.clone();
        let mut sum = one;
        let mut k: u64 = 1;
        while !term.is_zero() {
            term = w.mul(&term, &y) / BigInt::from(k);
            sum += &term;
            k += 1;
        }
        for _ in 0..halvings {
            sum = w.mul(&sum, &sum);
        }
        Some(w.lower(&sum, self))
    }

    /// `2·atanh(z)` for `|z| ≤ 1/3`.
    fn two_atanh(self, z: &BigInt) -> BigInt {
        let z2 = self.mul(z, z);
        let mut power = z.clone();
        let mut sum = z.clone();
        let mut k: u64 = 1;
        while !power.is_zero() {
            power = self.mul(&power, &z2);
            sum += &power / BigInt::from(2 * k + 1);
            k += 1;
        }
        sum * 2
    }

    pub fn ln(self, x: &BigInt) -> Option<BigInt> {
        if !x.is_positive() {
            return None;
        }
        // x = 2^k·y with y in [1, 2)
        let k = x.bits() as i64 - 1 - self.bits as i64;
        let w = self.with_guard(GUARD + 64);
        let xm = self.raise(x, w);
        let y = if k >= 0 { xm >> k as u64 } else { xm << (-k) as u64 };
        let one = w.one();
        let z = w.div(&(&y - &one), &(&y + &one))?;
        let ln_y = w.two_atanh(&z);
        let third = w.one() / BigInt::from(3);
        let ln2 = w.two_atanh(&third);
        let total = ln_y + ln2 * BigInt::from(k);
        Some(w.lower(&total, self))
    }

    /// `(sin x, cos x)`.
    pub fn sin_cos(self, x: &BigInt) -> (BigInt, BigInt) {
        let int_bits = (x.abs() >> self.bits).bits() as u32;
        let w = self.with_guard(GUARD + int_bits);
        let xm = self.raise(x, w);
        let two_pi: BigInt = w.pi() * 2;
        // r = x − round(x / 2π)·2π, |r| ≤ π
        let half: BigInt = &two_pi / 2;
        let shifted: BigInt = &xm + &half;
        let k = shifted.div_floor(&two_pi);
        let r = xm - k * &two_pi;
        let r2 = w.mul(&r, &r);
        let mut sin_term = r.clone();
        let mut sin = r;
        let mut cos_term = w.one();
        let mut cos = cos_term.clone();
        let mut n: u64 = 1;
        while !sin_term.is_zero() || !cos_term.is_zero() {
            cos_term = -w.mul(&cos_term, &r2) / BigInt::from((2 * n - 1) * (2 * n));
            sin_term = -w.mul(&sin_term, &r2) / BigInt::from((2 * n) * (2 * n + 1));
            cos += &cos_term;
            sin += &sin_term;
            n += 1;
        }
        (w.lower(&sin, self), w.lower(&cos, self))
    }
}
