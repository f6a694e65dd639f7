//! Text and structured renderings of results.
//!
//! Text puts the coefficient first and writes negative `α` powers as powers
//! of `η`: `2·α^2 + 1`, `1/3 − (1/2)·η + (1/6)·η^2`. Every rendering of a
//! number parses back to the same number.

use std::fmt::{self, Write};

use euclid_core::calculus::{write_term, SymReal};
use euclid_core::rational::{to_pq, Rational};
use euclid_core::{EuclideanNumber, Exponent, Series, SeriesPoly};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

fn rational_exponent(f: &mut String, base: &str, q: &Rational) {
    if q.is_one() {
        f.push_str(base);
    } else if q.is_integer() && q.is_positive() {
        let _ = write!(f, "{}^{}", base, q);
    } else {
        let _ = write!(f, "{}^({})", base, q);
    }
}

/// `2^α`, `α^2`, `η`, `2^(2·α)·α^(1/2)`; empty for the unit exponent.
pub fn monomial(e: &Exponent) -> String {
    let mut out = String::new();
    if !e.e2a.is_zero() {
        if e.e2a.is_one() {
            out.push_str("2^α");
        } else if e.e2a.is_integer() && e.e2a.is_positive() {
            let _ = write!(out, "2^({}·α)", e.e2a);
        } else if e.e2a.is_integer() {
            let _ = write!(out, "2^(−{}·α)", -&e.e2a);
        } else if e.e2a.is_positive() {
            let _ = write!(out, "2^(({})·α)", e.e2a);
        } else {
            let _ = write!(out, "2^(−({})·α)", -&e.e2a);
        }
    }
    if !e.ea.is_zero() {
        if !out.is_empty() {
            out.push('·');
        }
        if e.ea.is_positive() {
            rational_exponent(&mut out, "α", &e.ea);
        } else {
            rational_exponent(&mut out, "η", &-&e.ea);
        }
    }
    out
}

struct Terms<'a, C: euclid_core::Coefficient>(&'a Series<C>, fn(&C) -> SymReal);

impl<C: euclid_core::Coefficient> fmt::Display for Terms<'_, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.0.iter_desc().enumerate() {
            write_term(f, &(self.1)(c), &monomial(e), i == 0)?;
        }
        Ok(())
    }
}

fn sym(r: &Rational) -> SymReal {
    SymReal::rational(r.clone())
}

pub fn series(s: &SeriesPoly) -> String {
    Terms(s, sym).to_string()
}

pub fn sym_series(s: &Series<SymReal>) -> String {
    Terms(s, SymReal::clone).to_string()
}

pub fn number(x: &EuclideanNumber) -> String {
    if x.is_series() {
        series(x.numerator())
    } else {
        format!("({})/({})", series(x.numerator()), series(x.denominator()))
    }
}

/// Rational as `p/q`, or `p` for integers.
pub fn rational(r: &Rational) -> String {
    if r.is_negative() {
        format!("−{}", -r)
    } else {
        r.to_string()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Flag {
    Exact,
    Numeric,
    Indeterminate,
}

/// One line of structured output.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Record {
    pub kind: &'static str,
    pub text: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terms: Option<Vec<[String; 3]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub denominator_terms: Option<Vec<[String; 3]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub real_part: Option<String>,
    pub flags: Vec<Flag>,
}

impl Record {
    pub fn text(kind: &'static str, text: impl Into<String>, flag: Flag) -> Self {
        Record {
            kind,
            text: text.into(),
            terms: None,
            denominator_terms: None,
            real_part: None,
            flags: vec![flag],
        }
    }

    pub fn number(kind: &'static str, x: &EuclideanNumber) -> Self {
        let mut r = Record::text(kind, number(x), Flag::Exact);
        r.terms = Some(triples(x.numerator(), to_pq));
        if !x.is_series() {
            r.denominator_terms = Some(triples(x.denominator(), to_pq));
        }
        r
    }

    pub fn sym_series(kind: &'static str, s: &Series<SymReal>, flag: Flag) -> Self {
        let mut r = Record::text(kind, sym_series(s), flag);
        r.terms = Some(triples(s, |c| c.to_string()));
        r
    }

    pub fn with_real_part(mut self, real: impl Into<String>) -> Self {
        self.real_part = Some(real.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

fn triples<C: euclid_core::Coefficient>(s: &Series<C>, coef: impl Fn(&C) -> String) -> Vec<[String; 3]> {
    s.iter_desc()
        .map(|(e, c)| [to_pq(&e.e2a), to_pq(&e.ea), coef(c)])
        .collect()
}
