//! Closed-form integer sequences and their α-limits.

use alloc::boxed::Box;
use core::fmt;

use num_traits::Zero;

use crate::number::{ArithmeticError, EuclideanNumber};
use crate::rational::Rational;

/// Expression in one integer variable `n`.
#[derive(Clone, Debug, PartialEq)]
pub enum SeqExpr {
    Const(Rational),
    N,
    Neg(Box<SeqExpr>),
    Add(Box<SeqExpr>, Box<SeqExpr>),
    Sub(Box<SeqExpr>, Box<SeqExpr>),
    Mul(Box<SeqExpr>, Box<SeqExpr>),
    Div(Box<SeqExpr>, Box<SeqExpr>),
    Pow(Box<SeqExpr>, i64),
}

impl SeqExpr {
    pub fn constant(r: Rational) -> Self {
        SeqExpr::Const(r)
    }

    pub fn pow(self, k: i64) -> Self {
        SeqExpr::Pow(Box::new(self), k)
    }

    /// Value at a concrete index, `None` where a denominator vanishes.
    pub fn eval_at(&self, n: &Rational) -> Option<Rational> {
        Some(match self {
            SeqExpr::Const(c) => c.clone(),
            SeqExpr::N => n.clone(),
            SeqExpr::Neg(a) => -a.eval_at(n)?,
            SeqExpr::Add(a, b) => a.eval_at(n)? + b.eval_at(n)?,
            SeqExpr::Sub(a, b) => a.eval_at(n)? - b.eval_at(n)?,
            SeqExpr::Mul(a, b) => a.eval_at(n)? * b.eval_at(n)?,
            SeqExpr::Div(a, b) => {
                let d = b.eval_at(n)?;
                if d.is_zero() {
                    return None;
                }
                a.eval_at(n)? / d
            }
            SeqExpr::Pow(a, k) => {
                let base = a.eval_at(n)?;
                if *k < 0 && base.is_zero() {
                    return None;
                }
                num_traits::pow::Pow::pow(&base, i32::try_from(*k).ok()?)
            }
        })
    }
}

macro_rules! binary_op {
    ($trait:ident, $method:ident, $variant:ident) => {
        impl core::ops::$trait for SeqExpr {
            type Output = SeqExpr;
            fn $method(self, rhs: SeqExpr) -> SeqExpr {
                SeqExpr::$variant(Box::new(self), Box::new(rhs))
            }
        }
    };
}

binary_op!(Add, add, Add);
binary_op!(Sub, sub, Sub);
binary_op!(Mul, mul, Mul);
binary_op!(Div, div, Div);

/// Substitutes `n ↦ α` and evaluates exactly.
pub fn alpha_limit(s: &SeqExpr) -> Result<EuclideanNumber, ArithmeticError> {
    Ok(match s {
        SeqExpr::Const(c) => EuclideanNumber::from_rational(c.clone()),
        SeqExpr::N => EuclideanNumber::alpha(),
        SeqExpr::Neg(a) => -alpha_limit(a)?,
        SeqExpr::Add(a, b) => &alpha_limit(a)? + &alpha_limit(b)?,
        SeqExpr::Sub(a, b) => &alpha_limit(a)? - &alpha_limit(b)?,
        SeqExpr::Mul(a, b) => &alpha_limit(a)? * &alpha_limit(b)?,
        SeqExpr::Div(a, b) => alpha_limit(a)?.checked_div(&alpha_limit(b)?)?,
        SeqExpr::Pow(a, k) => alpha_limit(a)?.pow(*k)?,
    })
}

impl fmt::Display for SeqExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeqExpr::Const(c) => write!(f, "{}", c),
            SeqExpr::N => write!(f, "n"),
            SeqExpr::Neg(a) => write!(f, "-({})", a),
            SeqExpr::Add(a, b) => write!(f, "({} + {})", a, b),
            SeqExpr::Sub(a, b) => write!(f, "({} - {})", a, b),
            SeqExpr::Mul(a, b) => write!(f, "({} * {})", a, b),
            SeqExpr::Div(a, b) => write!(f, "({} / {})", a, b),
            SeqExpr::Pow(a, k) => write!(f, "({})^{}", a, k),
        }
    }
}
