//! Seeded generators shared by the integration tests.
#![allow(dead_code)]

use euclid_core::numerosity::{disjoint, Label};
use euclid_core::rational::{int, rat};
use euclid_core::{EuclideanNumber, Exponent, Ordinal, Rational, SetExpr};
use num_bigint::{BigInt, BigUint};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut StdRng) -> Rational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

pub fn nonzero_rational(rng: &mut StdRng) -> Rational {
    loop {
        let r = small_rational(rng);
        if r != int(0) {
            return r;
        }
    }
}

fn exponent(rng: &mut StdRng) -> Exponent {
    let e2a = match rng.gen_range(0..10) {
        0 => int(1),
        1 => int(-1),
        2 => rat(1, 2),
        _ => int(0),
    };
    let ea = rat(rng.gen_range(-3..=3), rng.gen_range(1..=2));
    Exponent::new(e2a, ea)
}

fn alpha_exponent(rng: &mut StdRng, lo: i64, hi: i64) -> Exponent {
    Exponent::alpha_pow(int(rng.gen_range(lo..=hi)))
}

pub fn monomial(rng: &mut StdRng) -> EuclideanNumber {
    EuclideanNumber::monomial(exponent(rng), nonzero_rational(rng))
}

fn sum_of(rng: &mut StdRng, terms: usize, mut term: impl FnMut(&mut StdRng) -> EuclideanNumber) -> EuclideanNumber {
    (0..terms).fold(EuclideanNumber::zero(), |acc, _| &acc + &term(rng))
}

/// A monomial, a short sum of monomials, or a quotient of two such sums.
pub fn number(rng: &mut StdRng) -> EuclideanNumber {
    match rng.gen_range(0..4) {
        0 => monomial(rng),
        1 => EuclideanNumber::from_rational(small_rational(rng)),
        2 => {
            let n = rng.gen_range(1..=3);
            sum_of(rng, n, monomial)
        }
        _ => {
            let n = rng.gen_range(1..=2);
            let num = sum_of(rng, n, monomial);
            loop {
                let d = rng.gen_range(1..=2);
                let den = sum_of(rng, d, monomial);
                if !den.is_zero() {
                    return num.checked_div(&den).expect("nonzero denominator");
                }
            }
        }
    }
}

pub fn nonzero_number(rng: &mut StdRng) -> EuclideanNumber {
    loop {
        let x = number(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// A number whose center is computable: any series over a denominator
/// that only involves powers of `α`.
pub fn centered_number(rng: &mut StdRng) -> EuclideanNumber {
    let n = rng.gen_range(1..=3);
    let num = sum_of(rng, n, monomial);
    if rng.gen_bool(0.4) {
        return num;
    }
    loop {
        let d = rng.gen_range(1..=2);
        let den = sum_of(rng, d, |r| {
            EuclideanNumber::monomial(alpha_exponent(r, -2, 2), nonzero_rational(r))
        });
        if !den.is_zero() {
            return num.checked_div(&den).expect("nonzero denominator");
        }
    }
}

/// A finite number: a quotient of `α`-polynomials of equal degree plus an
/// infinitesimal tail.
pub fn finite_number(rng: &mut StdRng) -> EuclideanNumber {
    let degree = rng.gen_range(0..=2);
    let poly = |rng: &mut StdRng, lead: Rational| {
        let mut x = EuclideanNumber::monomial(Exponent::alpha_pow(int(degree)), lead);
        for k in 0..degree {
            let c = small_rational(rng);
            x = &x + &EuclideanNumber::monomial(Exponent::alpha_pow(int(k)), c);
        }
        x
    };
    let lead = small_rational(rng);
    let num = poly(rng, lead);
    let den_lead = nonzero_rational(rng);
    let den = poly(rng, den_lead);
    let base = if den.is_zero() {
        num
    } else {
        num.checked_div(&den).expect("nonzero denominator")
    };
    let tails = rng.gen_range(0..=2);
    sum_of(rng, tails, |r| {
        let e2a = if r.gen_bool(0.2) { int(-1) } else { int(0) };
        EuclideanNumber::monomial(
            Exponent::new(e2a, rat(-r.gen_range(1..=4), r.gen_range(1..=2))),
            nonzero_rational(r),
        )
    }) + base
}

/// A nonzero infinitesimal.
pub fn infinitesimal(rng: &mut StdRng) -> EuclideanNumber {
    let lead = EuclideanNumber::monomial(
        Exponent::alpha_pow(rat(-rng.gen_range(1..=4), rng.gen_range(1..=2))),
        nonzero_rational(rng),
    );
    let tail = EuclideanNumber::monomial(Exponent::alpha_pow(int(-5)), small_rational(rng));
    &lead + &tail
}

/// A positive or negative infinite number.
pub fn infinite(rng: &mut StdRng) -> EuclideanNumber {
    let e = if rng.gen_bool(0.2) {
        Exponent::new(int(1), int(rng.gen_range(-2..=2)))
    } else {
        Exponent::alpha_pow(rat(rng.gen_range(1..=4), rng.gen_range(1..=2)))
    };
    let lead = EuclideanNumber::monomial(e, nonzero_rational(rng));
    &lead + &EuclideanNumber::from_rational(small_rational(rng))
}

fn finite_labels(rng: &mut StdRng) -> SetExpr {
    let mut ints: Vec<i64> = (-5..=20).collect();
    ints.shuffle(rng);
    let n = rng.gen_range(0..=4);
    let mut labels: Vec<Label> = ints[..n].iter().map(|&k| Label::Int(BigInt::from(k))).collect();
    if rng.gen_bool(0.2) {
        labels.push(Label::Sym(String::from("p")));
    }
    SetExpr::finite(labels).expect("distinct labels")
}

pub fn set_atom(rng: &mut StdRng) -> SetExpr {
    match rng.gen_range(0..12) {
        0 => SetExpr::Empty,
        1 => finite_labels(rng),
        2 => SetExpr::NPlus,
        3 => SetExpr::N,
        4 => SetExpr::Z,
        5 => SetExpr::Q,
        6 => SetExpr::QInterval(small_rational(rng)),
        7 => SetExpr::MultiplesOf(rng.gen_range(1..=8)),
        8 => SetExpr::KthPowers(rng.gen_range(1..=4)),
        9 => SetExpr::FinPowerSetNPlus,
        10 => SetExpr::Tagged(String::from(*["a", "b", "c"].choose(rng).expect("nonempty"))),
        _ => finite_labels(rng),
    }
}

/// A set expression of bounded depth. Unions are only formed between
/// provably disjoint parts.
pub fn set_expr(rng: &mut StdRng, depth: u32) -> SetExpr {
    if depth == 0 {
        return set_atom(rng);
    }
    match rng.gen_range(0..5) {
        0 | 1 => set_atom(rng),
        2 => SetExpr::product(set_expr(rng, depth - 1), set_expr(rng, depth - 1)),
        3 => SetExpr::product_singleton(set_expr(rng, depth - 1), "b"),
        _ => {
            let a = set_expr(rng, depth - 1);
            let b = set_expr(rng, depth - 1);
            if disjoint(&a, &b) {
                SetExpr::union(a, b)
            } else {
                a
            }
        }
    }
}

/// An ordinal below `ω^5` in Cantor normal form.
pub fn ordinal(rng: &mut StdRng) -> Ordinal {
    let mut exps: Vec<u64> = (0..5).collect();
    exps.shuffle(rng);
    let n = rng.gen_range(0..=3);
    Ordinal::from_terms(
        exps[..n]
            .iter()
            .map(|&e| (Ordinal::from_u64(e), BigUint::from(rng.gen_range(1u32..=5)))),
    )
}
