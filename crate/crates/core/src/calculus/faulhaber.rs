//! Bernoulli numbers and closed forms of power sums.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use super::func::FuncExpr;
use super::symreal::SymReal;
use super::CalculusError;
use crate::number::EuclideanNumber;
use crate::rational::{self, Rational};
use crate::series::Series;

/// Bernoulli number `Bₙ` with `B₁ = −1/2`.
pub fn bernoulli(n: u32) -> Rational {
    // Akiyama–Tanigawa; it yields B₁ = +1/2
    let n = n as usize;
    let mut a: Vec<Rational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        a.push(Rational::new(1.into(), ((m + 1) as i64).into()));
        for j in (1..=m).rev() {
            let diff = &a[j - 1] - &a[j];
            a[j - 1] = diff * Rational::from_integer((j as i64).into());
        }
    }
    if n == 1 {
        -a[0].clone()
    } else {
        a[0].clone()
    }
}

/// Coefficients, by increasing degree in `N`, of `Σ_{k=0}^{N−1} kᵖ`
/// (with `0⁰ = 1`): `(1/(p+1))·Σⱼ C(p+1, j)·Bⱼ·N^(p+1−j)`.
pub(crate) fn lower_power_sum_coefficients(p: u32) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); p as usize + 2];
    let scale = Rational::new(1.into(), (p as i64 + 1).into());
    for j in 0..=p {
        let c = rational::binomial(p as u64 + 1, j as u64) * bernoulli(j) * &scale;
        out[(p + 1 - j) as usize] += c;
    }
    out
}

/// Coefficients, by increasing degree in `N`, of `Σ_{k=1}^{N} kᵖ`.
pub fn power_sum_coefficients(p: u32) -> Vec<Rational> {
    let mut out = lower_power_sum_coefficients(p);
    // Σ_{k=1}^{N} kᵖ = Σ_{k=0}^{N−1} kᵖ + Nᵖ − 0ᵖ
    out[p as usize] += Rational::one();
    if p == 0 {
        out[0] -= Rational::one();
    }
    out
}

fn eval_rational_poly(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

fn eval_sym_poly(coeffs: &[SymReal], x: &Series<SymReal>) -> Series<SymReal> {
    coeffs
        .iter()
        .rev()
        .fold(Series::zero(), |acc, c| acc.mul(x).add(&Series::constant(c.clone())))
}

/// `Σ_{k=1}^{upper} term(k)` for a polynomial `term` (in the variable `x`,
/// read as the index `k`) in closed form.
///
/// `upper` must be a nonnegative integer or a positive infinite number
/// without denominator, such as `α` or `α/2`. The result is a series in
/// `upper` with the coefficients of `term`.
pub fn hyperfinite_sum(term: &FuncExpr, upper: &EuclideanNumber) -> Result<Series<SymReal>, CalculusError> {
    let poly = term
        .as_polynomial()
        .ok_or_else(|| CalculusError::NotPolynomial(format!("{}", term)))?;
    let bad_upper = || {
        CalculusError::Domain(format!(
            "upper bound {} is neither a nonnegative integer nor a positive infinite number",
            upper
        ))
    };
    if let Some(n) = upper.as_rational() {
        if !n.is_integer() || n.is_negative() {
            return Err(bad_upper());
        }
        let mut total = SymReal::zero();
        for (p, c) in poly.iter().enumerate() {
            if c.is_exact_zero() {
                continue;
            }
            let s = eval_rational_poly(&power_sum_coefficients(p as u32), &n);
            total = total.add(&c.mul(&SymReal::rational(s)));
        }
        return Ok(Series::constant(total));
    }
    if !upper.is_infinite() || upper.signum() != crate::number::Sign::Positive {
        return Err(bad_upper());
    }
    let n = upper
        .as_series()
        .ok_or_else(bad_upper)?
        .map_coefficients(|c| SymReal::rational(c.clone()));
    let mut total = Series::zero();
    for (p, c) in poly.iter().enumerate() {
        if c.is_exact_zero() {
            continue;
        }
        let s: Vec<SymReal> = power_sum_coefficients(p as u32)
            .into_iter()
            .map(SymReal::rational)
            .collect();
        total = total.add(&eval_sym_poly(&s, &n).scale(c));
    }
    Ok(total)
}

/// The number represented by a series with rational coefficients.
pub fn to_euclidean(s: &Series<SymReal>) -> Option<EuclideanNumber> {
    let mut out = Series::zero();
    for (e, c) in s.iter() {
        out.add_term(e.clone(), c.as_rational()?.clone());
    }
    Some(EuclideanNumber::from_series(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    /// Bₙ from Σ_{k=0}^{n} C(n+1, k)·Bₖ = 0.
    fn bernoulli_by_recurrence(n: usize) -> Vec<Rational> {
        let mut b = vec![Rational::one()];
        for m in 1..=n {
            let mut s = Rational::zero();
            for (k, bk) in b.iter().enumerate() {
                s += rational::binomial(m as u64 + 1, k as u64) * bk;
            }
            b.push(-s / Rational::from_integer((m as i64 + 1).into()));
        }
        b
    }

    #[test]
    fn bernoulli_numbers() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(12), rat(-691, 2730));
        for (n, b) in bernoulli_by_recurrence(30).into_iter().enumerate() {
            assert_eq!(bernoulli(n as u32), b, "B_{}", n);
        }
    }

    #[test]
    fn power_sums_match_direct_sums() {
        for p in 0..=8u32 {
            let coeffs = power_sum_coefficients(p);
            let mut direct = Rational::zero();
            for n in 1..=30i64 {
                direct += num_traits::pow(int(n), p as usize);
                assert_eq!(eval_rational_poly(&coeffs, &int(n)), direct, "p = {}, n = {}", p, n);
            }
        }
    }

    #[test]
    fn sums_up_to_alpha() {
        let k = FuncExpr::x();
        let alpha = EuclideanNumber::alpha();
        // Σ k² = α(α+1)(2α+1)/6
        let s = to_euclidean(&hyperfinite_sum(&k.clone().powi(2), &alpha).unwrap()).unwrap();
        let a1 = &alpha + &EuclideanNumber::one();
        let a2 = &(&alpha * &EuclideanNumber::from_integer(2)) + &EuclideanNumber::one();
        let expected = &(&(&alpha * &a1) * &a2) / &EuclideanNumber::from_integer(6);
        assert_eq!(s, expected);
        let ones = to_euclidean(&hyperfinite_sum(&FuncExpr::int(1), &alpha).unwrap()).unwrap();
        assert_eq!(ones, alpha);
        let direct = hyperfinite_sum(&k.clone().powi(3), &EuclideanNumber::from_integer(4)).unwrap();
        assert_eq!(direct.as_constant(), Some(SymReal::int(100)));
        assert!(hyperfinite_sum(&FuncExpr::apply(super::super::Func::Sin, k.clone()), &alpha).is_err());
        assert!(hyperfinite_sum(&k, &EuclideanNumber::eta()).is_err());
    }
}
