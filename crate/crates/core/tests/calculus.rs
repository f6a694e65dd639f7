mod common;

use euclid_core::calculus::{
    d_mean, d_plus, e_integral, e_integral_numeric, is_differentiable, DerivResult, Func, FuncExpr, NumericConfig,
    SymReal, ZeroTest,
};
use euclid_core::rational::{int, rat};
use euclid_core::Rational;
use num_traits::Signed;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::Rng;

fn rpoly(rng: &mut StdRng, max_degree: usize) -> Vec<Rational> {
    let d = rng.gen_range(0..=max_degree);
    (0..=d).map(|_| common::small_rational(rng)).collect()
}

fn poly(c: &[Rational]) -> FuncExpr {
    let coeffs: Vec<SymReal> = c.iter().cloned().map(SymReal::rational).collect();
    FuncExpr::polynomial(&coeffs)
}

fn eval(c: &[Rational], t: &Rational) -> Rational {
    c.iter().rev().fold(int(0), |acc, a| acc * t + a)
}

fn derivative(c: &[Rational]) -> Vec<Rational> {
    c.iter().enumerate().skip(1).map(|(k, a)| a * int(k as i64)).collect()
}

fn antiderivative(c: &[Rational]) -> Vec<Rational> {
    core::iter::once(int(0))
        .chain(c.iter().enumerate().map(|(k, a)| a / int(k as i64 + 1)))
        .collect()
}

fn real(d: DerivResult) -> SymReal {
    match d {
        DerivResult::Value { value, .. } => value,
        other => panic!("expected a real derivative, got {}", other),
    }
}

fn vanishes(x: &SymReal) -> bool {
    matches!(x.zero_test(NumericConfig::default()), ZeroTest::Zero(_))
}

/// A smooth function built from polynomials, `sin`, `cos` and `exp`.
fn smooth(rng: &mut StdRng) -> FuncExpr {
    let p = poly(&rpoly(rng, 3));
    match rng.gen_range(0..4) {
        0 => p,
        1 => FuncExpr::apply(Func::Sin, p),
        2 => FuncExpr::apply(Func::Cos, FuncExpr::x()) * p,
        _ => FuncExpr::apply(Func::Exp, FuncExpr::x()) + p,
    }
}

fn seeded<T: std::fmt::Debug>(f: fn(&mut StdRng) -> T) -> impl Strategy<Value = T> {
    any::<u64>().prop_map(move |seed| f(&mut common::rng(seed)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_derivative_is_formal((c, t) in seeded(|r| (rpoly(r, 8), common::small_rational(r)))) {
        let d = real(d_plus(&poly(&c), &SymReal::rational(t.clone())).unwrap());
        prop_assert_eq!(d, SymReal::rational(eval(&derivative(&c), &t)));
    }

    #[test]
    fn mean_derivative_is_linear(
        (f, g, a, b, t) in seeded(|r| (smooth(r), smooth(r), common::small_rational(r), common::small_rational(r), common::small_rational(r)))
    ) {
        let x0 = SymReal::rational(t);
        let (ca, cb) = (SymReal::rational(a), SymReal::rational(b));
        let combo = FuncExpr::constant(ca.clone()) * f.clone() + FuncExpr::constant(cb.clone()) * g.clone();
        let lhs = real(d_mean(&combo, &x0).unwrap());
        let rhs = ca.mul(&real(d_mean(&f, &x0).unwrap())).add(&cb.mul(&real(d_mean(&g, &x0).unwrap())));
        prop_assert!(vanishes(&lhs.sub(&rhs)), "{} vs {}", lhs, rhs);
    }

    #[test]
    fn derivative_vanishes_at_the_top_of_a_concave_parabola(
        (a, v, c) in seeded(|r| (common::nonzero_rational(r).abs(), common::small_rational(r), common::small_rational(r)))
    ) {
        // −a·(x − v)² + c
        let f = poly(&[&c - &a * &v * &v, int(2) * &a * &v, -a.clone()]);
        let x0 = SymReal::rational(v);
        prop_assert_eq!(real(d_mean(&f, &x0).unwrap()), SymReal::zero());
        prop_assert_eq!(real(d_plus(&f, &x0).unwrap()), SymReal::zero());
    }

    #[test]
    fn smooth_functions_are_differentiable((f, t) in seeded(|r| (smooth(r), common::small_rational(r)))) {
        prop_assert!(is_differentiable(&f, &SymReal::rational(t)).unwrap());
    }

    #[test]
    fn integral_real_part_matches_antiderivative(
        (c, a, w) in seeded(|r| (rpoly(r, 6), common::small_rational(r), common::nonzero_rational(r).abs()))
    ) {
        let b = &a + &w;
        let big = antiderivative(&c);
        let i = e_integral(&poly(&c), &a, &b).unwrap();
        prop_assert_eq!(i.real_part, SymReal::rational(eval(&big, &b) - eval(&big, &a)));
    }

    #[test]
    fn integral_is_additive_over_intervals(
        (c, a, w1, w2) in seeded(|r| (rpoly(r, 5), common::small_rational(r), common::nonzero_rational(r).abs(), common::nonzero_rational(r).abs()))
    ) {
        let f = poly(&c);
        let (b, e) = (&a + &w1, &a + &w1 + &w2);
        let left = e_integral(&f, &a, &b).unwrap().real_part;
        let right = e_integral(&f, &b, &e).unwrap().real_part;
        prop_assert_eq!(left.add(&right), e_integral(&f, &a, &e).unwrap().real_part);
    }
}

#[test]
fn numeric_integrals() {
    let x = FuncExpr::x();
    let v = e_integral_numeric(&(x.clone() * x), &SymReal::zero(), &SymReal::one(), 10_000).unwrap();
    assert!((v - 1.0 / 3.0).abs() < 1e-3, "{}", v);
    let v = e_integral_numeric(
        &FuncExpr::int(1),
        &SymReal::rational(rat(-1, 2)),
        &SymReal::int(3),
        10_000,
    )
    .unwrap();
    assert_eq!(v, 3.5);
}
