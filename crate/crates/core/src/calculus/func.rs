//! Expressions in one real variable `x`.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use super::symreal::{Analytic, SymReal};
use crate::rational::Rational;

/// Unary functions that may appear in a [`FuncExpr`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Func {
    Sin,
    Cos,
    Exp,
    Log,
    Abs,
    Sign,
    /// Indicator of the rationals.
    DirichletQ,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Exp => "exp",
            Func::Log => "log",
            Func::Abs => "abs",
            Func::Sign => "sign",
            Func::DirichletQ => "dirichlet",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "exp" => Func::Exp,
            "log" | "ln" => Func::Log,
            "abs" => Func::Abs,
            "sign" | "sgn" => Func::Sign,
            "dirichlet" | "dirichletQ" => Func::DirichletQ,
            _ => return None,
        })
    }

    pub fn analytic(self) -> Option<Analytic> {
        match self {
            Func::Sin => Some(Analytic::Sin),
            Func::Cos => Some(Analytic::Cos),
            Func::Exp => Some(Analytic::Exp),
            Func::Log => Some(Analytic::Log),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum FuncExpr {
    Const(SymReal),
    X,
    Neg(Box<FuncExpr>),
    Add(Box<FuncExpr>, Box<FuncExpr>),
    Sub(Box<FuncExpr>, Box<FuncExpr>),
    Mul(Box<FuncExpr>, Box<FuncExpr>),
    Div(Box<FuncExpr>, Box<FuncExpr>),
    Pow(Box<FuncExpr>, i64),
    Apply(Func, Box<FuncExpr>),
}

impl FuncExpr {
    pub fn x() -> Self {
        FuncExpr::X
    }

    pub fn constant(c: impl Into<SymReal>) -> Self {
        FuncExpr::Const(c.into())
    }

    pub fn int(n: i64) -> Self {
        FuncExpr::Const(SymReal::int(n))
    }

    pub fn powi(self, k: i64) -> Self {
        FuncExpr::Pow(Box::new(self), k)
    }

    pub fn apply(f: Func, arg: FuncExpr) -> Self {
        FuncExpr::Apply(f, Box::new(arg))
    }

    /// Polynomial with the given coefficients in increasing degree.
    pub fn polynomial(coeffs: &[SymReal]) -> Self {
        let mut out: Option<FuncExpr> = None;
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_exact_zero() {
                continue;
            }
            let term = match i {
                0 => FuncExpr::Const(c.clone()),
                _ => {
                    let p = if i == 1 {
                        FuncExpr::X
                    } else {
                        FuncExpr::X.powi(i as i64)
                    };
                    if *c == SymReal::one() {
                        p
                    } else {
                        FuncExpr::Const(c.clone()) * p
                    }
                }
            };
            out = Some(match out {
                None => term,
                Some(acc) => acc + term,
            });
        }
        out.unwrap_or_else(|| FuncExpr::int(0))
    }

    /// Substitutes `inner` for `x`.
    pub fn compose(&self, inner: &FuncExpr) -> FuncExpr {
        let go = |e: &FuncExpr| Box::new(e.compose(inner));
        match self {
            FuncExpr::Const(_) => self.clone(),
            FuncExpr::X => inner.clone(),
            FuncExpr::Neg(a) => FuncExpr::Neg(go(a)),
            FuncExpr::Add(a, b) => FuncExpr::Add(go(a), go(b)),
            FuncExpr::Sub(a, b) => FuncExpr::Sub(go(a), go(b)),
            FuncExpr::Mul(a, b) => FuncExpr::Mul(go(a), go(b)),
            FuncExpr::Div(a, b) => FuncExpr::Div(go(a), go(b)),
            FuncExpr::Pow(a, k) => FuncExpr::Pow(go(a), *k),
            FuncExpr::Apply(f, a) => FuncExpr::Apply(*f, go(a)),
        }
    }

    /// Floating-point value at `x`; `None` outside the domain or for
    /// `dirichlet`, which has no floating-point meaning.
    pub fn eval_f64(&self, x: f64) -> Option<f64> {
        let v = match self {
            FuncExpr::Const(c) => c.to_f64()?,
            FuncExpr::X => x,
            FuncExpr::Neg(a) => -a.eval_f64(x)?,
            FuncExpr::Add(a, b) => a.eval_f64(x)? + b.eval_f64(x)?,
            FuncExpr::Sub(a, b) => a.eval_f64(x)? - b.eval_f64(x)?,
            FuncExpr::Mul(a, b) => a.eval_f64(x)? * b.eval_f64(x)?,
            FuncExpr::Div(a, b) => {
                let d = b.eval_f64(x)?;
                if d == 0.0 {
                    return None;
                }
                a.eval_f64(x)? / d
            }
            FuncExpr::Pow(a, k) => {
                let base = a.eval_f64(x)?;
                libm::pow(base, *k as f64)
            }
            FuncExpr::Apply(f, a) => {
                let v = a.eval_f64(x)?;
                match f {
                    Func::Sin => libm::sin(v),
                    Func::Cos => libm::cos(v),
                    Func::Exp => libm::exp(v),
                    Func::Log if v > 0.0 => libm::log(v),
                    Func::Log => return None,
                    Func::Abs => libm::fabs(v),
                    Func::Sign => {
                        if v > 0.0 {
                            1.0
                        } else if v < 0.0 {
                            -1.0
                        } else {
                            0.0
                        }
                    }
                    Func::DirichletQ => return None,
                }
            }
        };
        if v.is_finite() {
            Some(v)
        } else {
            None
        }
    }

    /// Coefficients in increasing degree when the expression is a polynomial
    /// in `x`.
    pub fn as_polynomial(&self) -> Option<Vec<SymReal>> {
        let mut p = match self {
            FuncExpr::Const(c) => vec![c.clone()],
            FuncExpr::X => vec![SymReal::zero(), SymReal::one()],
            FuncExpr::Neg(a) => a.as_polynomial()?.iter().map(|c| c.neg()).collect(),
            FuncExpr::Add(a, b) => poly_add(&a.as_polynomial()?, &b.as_polynomial()?),
            FuncExpr::Sub(a, b) => {
                let nb: Vec<SymReal> = b.as_polynomial()?.iter().map(|c| c.neg()).collect();
                poly_add(&a.as_polynomial()?, &nb)
            }
            FuncExpr::Mul(a, b) => poly_mul(&a.as_polynomial()?, &b.as_polynomial()?),
            FuncExpr::Div(a, b) => {
                let d = b.as_polynomial()?;
                let d = trim(d);
                if d.len() != 1 {
                    return None;
                }
                let inv = d[0].recip()?;
                a.as_polynomial()?.iter().map(|c| c.mul(&inv)).collect()
            }
            FuncExpr::Pow(a, k) if *k >= 0 => {
                let base = a.as_polynomial()?;
                let mut acc = vec![SymReal::one()];
                for _ in 0..*k {
                    acc = poly_mul(&acc, &base);
                }
                acc
            }
            FuncExpr::Pow(..) | FuncExpr::Apply(..) => return None,
        };
        p = trim(p);
        Some(p)
    }

    /// Polynomial coefficients when they are all rational.
    pub fn as_rational_polynomial(&self) -> Option<Vec<Rational>> {
        self.as_polynomial()?
            .into_iter()
            .map(|c| c.as_rational().cloned())
            .collect()
    }

    fn precedence(&self) -> u8 {
        match self {
            FuncExpr::Add(..) | FuncExpr::Sub(..) => 1,
            FuncExpr::Mul(..) | FuncExpr::Div(..) => 2,
            FuncExpr::Neg(_) => 3,
            FuncExpr::Pow(..) => 4,
            FuncExpr::Const(c) => match c {
                SymReal::Rat(r) if r < &Rational::zero() => 3,
                SymReal::Rat(r) if !r.is_integer() => 2,
                SymReal::Add(..) => 1,
                SymReal::Mul(..) | SymReal::Inv(_) => 2,
                _ => 5,
            },
            FuncExpr::X | FuncExpr::Apply(..) => 5,
        }
    }
}

macro_rules! binary_op {
    ($trait:ident, $method:ident, $variant:ident) => {
        impl core::ops::$trait for FuncExpr {
            type Output = FuncExpr;
            fn $method(self, rhs: FuncExpr) -> FuncExpr {
                FuncExpr::$variant(Box::new(self), Box::new(rhs))
            }
        }
    };
}

binary_op!(Add, add, Add);
binary_op!(Sub, sub, Sub);
binary_op!(Mul, mul, Mul);
binary_op!(Div, div, Div);

impl core::ops::Neg for FuncExpr {
    type Output = FuncExpr;
    fn neg(self) -> FuncExpr {
        FuncExpr::Neg(Box::new(self))
    }
}

fn trim(mut p: Vec<SymReal>) -> Vec<SymReal> {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_exact_zero()) {
        p.pop();
    }
    p
}

fn poly_add(a: &[SymReal], b: &[SymReal]) -> Vec<SymReal> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.add(y),
            (Some(x), None) | (None, Some(x)) => x.clone(),
            (None, None) => SymReal::zero(),
        })
        .collect()
}

fn poly_mul(a: &[SymReal], b: &[SymReal]) -> Vec<SymReal> {
    let mut out = vec![SymReal::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}

/// Writes constants in the ASCII input syntax (`pi`, `sqrt(2)`, `-`).
fn write_const(f: &mut fmt::Formatter<'_>, c: &SymReal) -> fmt::Result {
    match c {
        SymReal::Rat(r) => write!(f, "{}", r),
        SymReal::Pi => write!(f, "pi"),
        SymReal::E => write!(f, "e"),
        SymReal::Sqrt(r) => write!(f, "sqrt({})", r),
        SymReal::Bounded(s) => write!(f, "{}", s),
        SymReal::Apply(g, a) => {
            write!(f, "{}(", g.name())?;
            write_const(f, a)?;
            write!(f, ")")
        }
        SymReal::Add(a, b) => {
            write_const(f, a)?;
            write!(f, " + ")?;
            write_const_factor(f, b)
        }
        SymReal::Mul(a, b) => {
            write_const_factor(f, a)?;
            write!(f, "*")?;
            write_const_factor(f, b)
        }
        SymReal::Inv(a) => {
            write!(f, "1/")?;
            write_const_factor(f, a)
        }
        SymReal::Pow(a, k) => {
            write_const_factor(f, a)?;
            write!(f, "^{}", k)
        }
    }
}

fn write_const_factor(f: &mut fmt::Formatter<'_>, c: &SymReal) -> fmt::Result {
    let atomic = matches!(
        c,
        SymReal::Pi | SymReal::E | SymReal::Sqrt(_) | SymReal::Apply(..) | SymReal::Bounded(_)
    ) || matches!(c, SymReal::Rat(r) if r.is_integer() && r >= &Rational::zero());
    if atomic {
        write_const(f, c)
    } else {
        write!(f, "(")?;
        write_const(f, c)?;
        write!(f, ")")
    }
}

impl FuncExpr {
    fn write_operand(&self, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
        if self.precedence() < min_prec {
            write!(f, "({})", self)
        } else {
            write!(f, "{}", self)
        }
    }
}

/// ASCII rendering in the input syntax, e.g. `x*sin(1/x^2)`.
impl fmt::Display for FuncExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FuncExpr::Const(c) => write_const(f, c),
            FuncExpr::X => write!(f, "x"),
            FuncExpr::Neg(a) => {
                write!(f, "-")?;
                a.write_operand(f, 4)
            }
            FuncExpr::Add(a, b) => {
                a.write_operand(f, 1)?;
                write!(f, " + ")?;
                b.write_operand(f, 2)
            }
            FuncExpr::Sub(a, b) => {
                a.write_operand(f, 1)?;
                write!(f, " - ")?;
                b.write_operand(f, 2)
            }
            FuncExpr::Mul(a, b) => {
                a.write_operand(f, 2)?;
                write!(f, "*")?;
                b.write_operand(f, 3)
            }
            FuncExpr::Div(a, b) => {
                a.write_operand(f, 2)?;
                write!(f, "/")?;
                b.write_operand(f, 4)
            }
            FuncExpr::Pow(a, k) => {
                a.write_operand(f, 5)?;
                if *k < 0 {
                    write!(f, "^({})", k)
                } else {
                    write!(f, "^{}", k)
                }
            }
            FuncExpr::Apply(g, a) => write!(f, "{}({})", g.name(), a),
        }
    }
}
