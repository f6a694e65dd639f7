mod common;

use euclid_core::rational::{int, rat};
use euclid_core::{alpha_limit, ArithmeticError, EuclideanNumber, Exponent, Kind, Rational, SeqExpr, Sign};
use num_traits::Zero;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::Rng;

fn n(k: i64) -> EuclideanNumber {
    EuclideanNumber::from_integer(k)
}

fn alpha() -> EuclideanNumber {
    EuclideanNumber::alpha()
}

fn eta() -> EuclideanNumber {
    EuclideanNumber::eta()
}

#[test]
fn comparisons_across_scales() {
    assert!(eta() < EuclideanNumber::from_rational(rat(1, 1_000_000)));
    assert!(alpha() > EuclideanNumber::from_rational(Rational::from_integer(num_bigint::BigInt::from(10).pow(100))));
    assert!(EuclideanNumber::two_pow_alpha() > EuclideanNumber::alpha_pow(int(1000)));
    assert!(-alpha() < n(-1_000_000));
}

#[test]
fn classification() {
    let c = (&(&eta() * &eta()) + &eta()).classify();
    assert_eq!((c.kind, c.sign), (Kind::InfinitesimalNonzero, Sign::Positive));
    let c = (&n(3) + &eta()).classify();
    assert_eq!((c.kind, c.sign), (Kind::FiniteNoninfinitesimal, Sign::Positive));
    let c = EuclideanNumber::omega().classify();
    assert_eq!((c.kind, c.sign), (Kind::Infinite, Sign::Positive));
    assert_eq!(EuclideanNumber::zero().classify().kind, Kind::Zero);
}

#[test]
fn standard_part_and_center() {
    let x = &(&n(3) + &(&n(5) * &eta())) - &(&eta() * &eta());
    assert_eq!(x.st().unwrap(), int(3));
    let y = (&(&n(2) * &alpha()) + &n(1)).checked_div(&alpha()).unwrap();
    assert_eq!(y.st().unwrap(), int(2));
    assert_eq!(y, &n(2) + &eta());
    assert_eq!(alpha().st(), Err(ArithmeticError::NotFinite));

    let half = EuclideanNumber::from_rational(rat(1, 2));
    assert_eq!((&(&alpha() + &half) + &eta()).ctr().unwrap(), &alpha() + &half);
    let a = alpha();
    let q = (&a * &a).checked_div(&(&a + &n(1))).unwrap();
    assert_eq!(q.ctr().unwrap(), &a - &n(1));

    // 1/(1 + η) = 1 − η + η² − …
    let inv = n(1).checked_div(&(&n(1) + &eta())).unwrap();
    let e = |k: i64| Exponent::alpha_pow(int(-k));
    let head = inv.expansion(3);
    assert_eq!(head.coefficient(&e(0)), Some(&int(1)));
    assert_eq!(head.coefficient(&e(1)), Some(&int(-1)));
    assert_eq!(head.coefficient(&e(2)), Some(&int(1)));
    assert_eq!(inv.ctr().unwrap(), n(1));
}

#[test]
fn powers_and_roots() {
    let a = alpha();
    let r = a.root(2).unwrap();
    assert_eq!(&r * &r, a);
    assert_eq!(a.pow(0).unwrap(), n(1));
    let w = &a + &n(1);
    assert_eq!(w.pow(2).unwrap(), &(&(&a * &a) + &(&n(2) * &a)) + &n(1));
    assert!(matches!((&a + &n(1)).root(2), Err(ArithmeticError::Unsupported(_))));
    assert!(matches!(n(2).root(2), Err(ArithmeticError::Unsupported(_))));
    assert_eq!(EuclideanNumber::zero().recip(), Err(ArithmeticError::DivisionByZero));
}

#[test]
fn monads_and_galaxies() {
    assert!(n(1).same_monad(&(&n(1) + &eta())));
    assert!(!alpha().same_monad(&(&alpha() + &n(1))));
    assert!(alpha().same_galaxy(&(&alpha() + &n(1))));
    assert!(!alpha().same_galaxy(&(&n(2) * &alpha())));
}

#[test]
fn alpha_limits() {
    let s = SeqExpr::N;
    assert_eq!(alpha_limit(&s).unwrap(), alpha());
    let s1 = SeqExpr::Add(Box::new(SeqExpr::N), Box::new(SeqExpr::constant(int(1))));
    assert_eq!(alpha_limit(&s1).unwrap(), EuclideanNumber::omega());
    let s2 = SeqExpr::Div(
        Box::new(SeqExpr::Add(
            Box::new(SeqExpr::N.pow(2)),
            Box::new(SeqExpr::constant(int(1))),
        )),
        Box::new(SeqExpr::N),
    );
    assert_eq!(alpha_limit(&s2).unwrap(), &alpha() + &eta());
    let zero_den = SeqExpr::Div(
        Box::new(SeqExpr::constant(int(1))),
        Box::new(SeqExpr::Sub(Box::new(SeqExpr::N), Box::new(SeqExpr::N))),
    );
    assert!(alpha_limit(&zero_den).is_err());
}

fn seq(rng: &mut StdRng, depth: u32) -> SeqExpr {
    if depth == 0 || rng.gen_bool(0.3) {
        return if rng.gen_bool(0.5) {
            SeqExpr::N
        } else {
            SeqExpr::constant(common::small_rational(rng))
        };
    }
    let a = Box::new(seq(rng, depth - 1));
    match rng.gen_range(0..5) {
        0 => SeqExpr::Add(a, Box::new(seq(rng, depth - 1))),
        1 => SeqExpr::Sub(a, Box::new(seq(rng, depth - 1))),
        2 => SeqExpr::Mul(a, Box::new(seq(rng, depth - 1))),
        3 => SeqExpr::Neg(a),
        _ => SeqExpr::Pow(a, rng.gen_range(0..=3)),
    }
}

fn seeded<T: std::fmt::Debug>(f: fn(&mut StdRng) -> T) -> impl Strategy<Value = T> {
    any::<u64>().prop_map(move |seed| f(&mut common::rng(seed)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn monad_and_galaxy_are_equivalences(
        (a, b, c) in seeded(|r| {
            let base = common::number(r);
            let near = |r: &mut StdRng| match r.gen_range(0..3) {
                0 => common::infinitesimal(r),
                1 => common::finite_number(r),
                _ => common::number(r),
            };
            let b = &base + &near(r);
            let c = &b + &near(r);
            (base, b, c)
        })
    ) {
        for rel in [EuclideanNumber::same_monad, EuclideanNumber::same_galaxy] {
            prop_assert!(rel(&a, &a));
            prop_assert_eq!(rel(&a, &b), rel(&b, &a));
            if rel(&a, &b) && rel(&b, &c) {
                prop_assert!(rel(&a, &c));
            }
        }
        if a.same_monad(&b) {
            prop_assert!(a.same_galaxy(&b));
        }
    }

    #[test]
    fn alpha_limit_is_a_homomorphism(
        (s, t) in seeded(|r| (seq(r, 3), seq(r, 3)))
    ) {
        let (ls, lt) = (alpha_limit(&s).unwrap(), alpha_limit(&t).unwrap());
        let pair = |a: &SeqExpr, b: &SeqExpr| (Box::new(a.clone()), Box::new(b.clone()));
        let (a, b) = pair(&s, &t);
        prop_assert_eq!(alpha_limit(&SeqExpr::Add(a, b)).unwrap(), &ls + &lt);
        let (a, b) = pair(&s, &t);
        prop_assert_eq!(alpha_limit(&SeqExpr::Sub(a, b)).unwrap(), &ls - &lt);
        let (a, b) = pair(&s, &t);
        prop_assert_eq!(alpha_limit(&SeqExpr::Mul(a, b)).unwrap(), &ls * &lt);
        let (a, b) = pair(&s, &t);
        match alpha_limit(&SeqExpr::Div(a, b)) {
            Ok(q) => prop_assert_eq!(q, ls.checked_div(&lt).unwrap()),
            Err(_) => prop_assert!(lt.is_zero()),
        }
    }

    #[test]
    fn nonvanishing_sequences_have_nonzero_limits(s in seeded(|r| seq(r, 3))) {
        // a polynomial in n that is nonzero at some natural is not the zero polynomial
        let nonzero_somewhere = (1..=12).any(|k| s.eval_at(&int(k)).is_some_and(|v| !v.is_zero()));
        let l = alpha_limit(&s).unwrap();
        prop_assert_eq!(nonzero_somewhere, !l.is_zero());
    }
}
