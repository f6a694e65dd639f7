//! The E-integral on the uniform α-grid.
//!
//! The grid on `[a, b]` has `α` steps of width `(b − a)·η`. Its exact sums
//! carry correction terms in powers of `η` that depend on the grid; only
//! their real part is the integral in the classical sense.

use alloc::format;
use alloc::string::String;

use num_traits::Zero;

use super::faulhaber::{bernoulli, to_euclidean};
use super::func::FuncExpr;
use super::symreal::SymReal;
use super::CalculusError;
use crate::exponent::Exponent;
use crate::number::EuclideanNumber;
use crate::rational::{self, Rational};
use crate::series::Series;

/// The uniform grid `{a + k·(b − a)·η : 0 ≤ k ≤ α}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperfiniteGrid {
    a: Rational,
    b: Rational,
}

impl HyperfiniteGrid {
    pub fn new(a: Rational, b: Rational) -> Result<Self, CalculusError> {
        if a >= b {
            return Err(CalculusError::InvalidInterval);
        }
        Ok(HyperfiniteGrid { a, b })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// Number of steps, `α`.
    pub fn steps(&self) -> EuclideanNumber {
        EuclideanNumber::alpha()
    }

    /// `(b − a)·η`.
    pub fn spacing(&self) -> EuclideanNumber {
        EuclideanNumber::from_rational(&self.b - &self.a) * EuclideanNumber::eta()
    }

    /// `α + 1`, the hypercardinality of the grid.
    pub fn point_count(&self) -> EuclideanNumber {
        EuclideanNumber::alpha() + EuclideanNumber::one()
    }

    /// The `k`-th grid point `a + k·(b − a)·η`.
    pub fn point(&self, k: &EuclideanNumber) -> EuclideanNumber {
        EuclideanNumber::from_rational(self.a.clone()) + k * &self.spacing()
    }
}

/// Result of [`e_integral`].
#[derive(Clone, Debug, PartialEq)]
pub struct EIntegral {
    /// `Σ_{k=0}^{α−1} f(a + k·h)·h` with `h = (b − a)·η`.
    pub value: Series<SymReal>,
    /// The center of `value`, equal to the classical integral.
    pub real_part: SymReal,
    pub grid: HyperfiniteGrid,
}

impl EIntegral {
    /// `value` as a number, when its coefficients are rational.
    pub fn as_euclidean(&self) -> Option<EuclideanNumber> {
        to_euclidean(&self.value)
    }
}

/// Exact E-integral of a polynomial over `[a, b]`.
///
/// With the Taylor coefficients `dⱼ` of `f` at `a` and
/// `Σ_{k=0}^{α−1} kʲ = (1/(j+1))·Σᵢ C(j+1, i)·Bᵢ·α^(j+1−i)`, the sum is
/// `Σⱼ dⱼ·(b−a)^(j+1)/(j+1) · Σᵢ C(j+1, i)·Bᵢ·ηⁱ`.
pub fn e_integral(f: &FuncExpr, a: &Rational, b: &Rational) -> Result<EIntegral, CalculusError> {
    let grid = HyperfiniteGrid::new(a.clone(), b.clone())?;
    let poly = f
        .as_polynomial()
        .ok_or_else(|| CalculusError::NotPolynomial(format!("{}", f)))?;
    let width = b - a;
    let a_sym = SymReal::rational(a.clone());
    let mut value: Series<SymReal> = Series::zero();
    for j in 0..poly.len() {
        // dⱼ = Σ_{i≥j} cᵢ·C(i, j)·a^(i−j)
        let mut d = SymReal::zero();
        for (i, c) in poly.iter().enumerate().skip(j) {
            let shift = a_sym.powi((i - j) as i64).expect("nonnegative power");
            let binom = SymReal::rational(rational::binomial(i as u64, j as u64));
            d = d.add(&c.mul(&binom).mul(&shift));
        }
        if d.is_exact_zero() {
            continue;
        }
        let scale = num_traits::pow(width.clone(), j + 1) / Rational::from_integer((j as i64 + 1).into());
        for i in 0..=j {
            let c = rational::binomial(j as u64 + 1, i as u64) * bernoulli(i as u32) * &scale;
            if c.is_zero() {
                continue;
            }
            let e = Exponent::alpha_pow(-Rational::from_integer((i as i64).into()));
            value.add_term(e, d.mul(&SymReal::rational(c)));
        }
    }
    let real_part = value
        .coefficient(&Exponent::zero())
        .cloned()
        .unwrap_or_else(SymReal::zero);
    Ok(EIntegral { value, real_part, grid })
}

/// Left-endpoint sum `((b − a)/n)·Σ_{k=0}^{n−1} f(a + k·(b − a)/n)` in
/// double precision with compensated summation.
///
/// For smooth `f` the error of the rule itself is about
/// `|f(b) − f(a)|·(b − a)/(2n)`.
pub fn e_integral_numeric(f: &FuncExpr, a: &SymReal, b: &SymReal, n: u64) -> Result<f64, CalculusError> {
    let lo = a
        .to_f64()
        .ok_or_else(|| CalculusError::NumericFailure(format!("cannot evaluate {}", a)))?;
    let hi = b
        .to_f64()
        .ok_or_else(|| CalculusError::NumericFailure(format!("cannot evaluate {}", b)))?;
    if lo >= hi {
        return Err(CalculusError::InvalidInterval);
    }
    if n == 0 {
        return Err(CalculusError::NumericFailure(String::from("need at least one step")));
    }
    let width = hi - lo;
    let mut sum = Neumaier::default();
    for k in 0..n {
        let x = lo + width * (k as f64 / n as f64);
        let y = f
            .eval_f64(x)
            .ok_or_else(|| CalculusError::NumericFailure(format!("{} at x = {}", f, x)))?;
        sum.add(y);
    }
    Ok(width * (sum.total() / n as f64))
}

/// Neumaier's variant of Kahan summation.
#[derive(Default)]
struct Neumaier {
    sum: f64,
    compensation: f64,
}

impl Neumaier {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if libm::fabs(self.sum) >= libm::fabs(x) {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn total(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Antiderivative difference `∫ₐᵇ p` for rational coefficients.
#[cfg(test)]
fn classical(poly: &[Rational], a: &Rational, b: &Rational) -> Rational {
    let mut s = Rational::zero();
    for (i, c) in poly.iter().enumerate() {
        let k = i + 1;
        let d = Rational::from_integer((k as i64).into());
        s += c * (num_traits::pow(b.clone(), k) - num_traits::pow(a.clone(), k)) / d;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::func::Func;
    use crate::rational::{int, rat};

    fn x() -> FuncExpr {
        FuncExpr::x()
    }

    fn eta_pow(i: i64) -> Exponent {
        Exponent::alpha_pow(int(-i))
    }

    #[test]
    fn square_on_unit_interval() {
        let r = e_integral(&x().powi(2), &int(0), &int(1)).unwrap();
        let expected = Series::from_terms([
            (eta_pow(0), SymReal::rational(rat(1, 3))),
            (eta_pow(1), SymReal::rational(rat(-1, 2))),
            (eta_pow(2), SymReal::rational(rat(1, 6))),
        ]);
        assert_eq!(r.value, expected);
        assert_eq!(r.real_part, SymReal::rational(rat(1, 3)));
        let e = r.as_euclidean().unwrap();
        let eta = EuclideanNumber::eta();
        let by_hand = EuclideanNumber::from_rational(rat(1, 3)) - &eta * &EuclideanNumber::from_rational(rat(1, 2))
            + &(&eta * &eta) * &EuclideanNumber::from_rational(rat(1, 6));
        assert_eq!(e, by_hand);
    }

    #[test]
    fn linear_and_constant() {
        let r = e_integral(&x(), &int(0), &int(1)).unwrap();
        assert_eq!(r.real_part, SymReal::rational(rat(1, 2)));
        assert_eq!(r.value.coefficient(&eta_pow(1)), Some(&SymReal::rational(rat(-1, 2))));
        let c = e_integral(&FuncExpr::constant(rat(7, 3)), &rat(-1, 2), &int(2)).unwrap();
        assert_eq!(c.value, Series::constant(SymReal::rational(rat(35, 6))));
        assert!(matches!(
            e_integral(&x(), &int(1), &int(1)),
            Err(CalculusError::InvalidInterval)
        ));
        assert!(matches!(
            e_integral(&FuncExpr::apply(Func::Sin, x()), &int(0), &int(1)),
            Err(CalculusError::NotPolynomial(_))
        ));
    }

    #[test]
    fn real_part_is_the_classical_integral() {
        let poly = [rat(2, 3), int(-1), int(0), rat(5, 4), int(3)];
        let f = FuncExpr::polynomial(
            &poly
                .iter()
                .cloned()
                .map(SymReal::rational)
                .collect::<alloc::vec::Vec<_>>(),
        );
        for (a, b) in [(int(0), int(1)), (rat(-3, 2), rat(7, 5)), (int(2), int(9))] {
            let r = e_integral(&f, &a, &b).unwrap();
            assert_eq!(r.real_part, SymReal::rational(classical(&poly, &a, &b)));
        }
    }

    #[test]
    fn grid() {
        let g = HyperfiniteGrid::new(int(0), int(2)).unwrap();
        assert_eq!(&g.spacing() * &g.steps(), EuclideanNumber::from_integer(2));
        assert_eq!(g.point(&g.steps()), EuclideanNumber::from_integer(2));
        assert_eq!(g.point_count(), EuclideanNumber::alpha() + EuclideanNumber::one());
    }

    #[test]
    fn numeric_surrogate() {
        let sq = e_integral_numeric(&x().powi(2), &SymReal::zero(), &SymReal::one(), 10_000).unwrap();
        assert!((sq - 1.0 / 3.0).abs() < 1e-3);
        let one = e_integral_numeric(&FuncExpr::int(1), &SymReal::int(-2), &SymReal::int(3), 7).unwrap();
        assert_eq!(one, 5.0);
        let s = e_integral_numeric(&FuncExpr::apply(Func::Sin, x()), &SymReal::zero(), &SymReal::Pi, 1000).unwrap();
        assert!((s - 2.0).abs() < 1e-5);
        assert!(e_integral_numeric(&x().powi(-1), &SymReal::zero(), &SymReal::one(), 10).is_err());
    }
}
