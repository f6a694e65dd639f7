//! Rational helpers on top of [`num_rational::BigRational`].

use alloc::string::String;
use core::fmt::Write;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d`. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Exact `k`-th root of `r`, if it is rational.
pub fn exact_root(r: &Rational, k: u32) -> Option<Rational> {
    if k == 0 {
        return None;
    }
    if k == 1 {
        return Some(r.clone());
    }
    if r.is_negative() {
        if k.is_multiple_of(2) {
            return None;
        }
        return exact_root(&-r, k).map(|x| -x);
    }
    let n = exact_int_root(r.numer(), k)?;
    let d = exact_int_root(r.denom(), k)?;
    Some(Rational::new(n, d))
}

fn exact_int_root(n: &BigInt, k: u32) -> Option<BigInt> {
    let root = n.nth_root(k);
    if num_traits::pow(root.clone(), k as usize) == *n {
        Some(root)
    } else {
        None
    }
}

/// Exact integer `k`-th root of a nonnegative integer.
pub fn exact_uint_root(n: &BigUint, k: u32) -> Option<BigUint> {
    let root = n.nth_root(k);
    if num_traits::pow(root.clone(), k as usize) == *n {
        Some(root)
    } else {
        None
    }
}

/// Renders a rational as `p/q`, including `q = 1`.
pub fn to_pq(r: &Rational) -> String {
    let mut s = String::new();
    let _ = write!(s, "{}/{}", r.numer(), r.denom());
    s
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Integer value if `r` is an integer that fits in `i64`.
pub fn to_i64(r: &Rational) -> Option<i64> {
    if is_integer(r) {
        r.numer().to_i64()
    } else {
        None
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    // Ratio::to_f64 is accurate for large numerators and denominators.
    num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
}

/// `n choose k` as a rational.
pub fn binomial(n: u64, k: u64) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc /= BigInt::from(i + 1);
    }
    from_bigint(acc)
}

pub fn lcm_denominators<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    it.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}
