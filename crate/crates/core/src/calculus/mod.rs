//! Calculus on normal functions of one variable.
//!
//! Functions are [`FuncExpr`] trees with [`SymReal`] constants. Near a point
//! they are expanded as truncated power series in a positive infinitesimal
//! ([`expand`]); derivatives are centers of difference quotients
//! ([`deriv`]); sums and integrals over the uniform α-grid have closed forms
//! through Faulhaber's formulas ([`faulhaber`], [`integral`]).

use alloc::string::String;
use core::fmt;

use crate::number::ArithmeticError;

pub mod deriv;
pub mod expand;
pub mod faulhaber;
pub mod fixed;
pub mod func;
pub mod integral;
pub mod symreal;

pub use deriv::{
    d_mean, d_mean_with, d_minus, d_minus_with, d_plus, d_plus_with, derivability, derivability_with,
    differentiability, differentiability_with, grid_d_plus, grid_d_plus_with, is_derivable, is_differentiable,
    DerivResult, Derivability, Differentiability,
};
pub use expand::{expand, expand_with, write_term, Direction, InfinitesimalSeries, Variable};
pub use faulhaber::{bernoulli, hyperfinite_sum, power_sum_coefficients, to_euclidean};
pub use func::{Func, FuncExpr};
pub use integral::{e_integral, e_integral_numeric, EIntegral, HyperfiniteGrid};
pub use symreal::{Analytic, Confidence, EvalError, NumericConfig, SymReal, ZeroTest};

/// Default truncation order of expansions.
pub const DEFAULT_ORDER: i64 = 4;

#[derive(Clone, Debug, PartialEq)]
pub enum CalculusError {
    /// The function has a non-removable pole at the point.
    Pole(String),
    /// Outside the domain, e.g. `log` of a negative number.
    Domain(String),
    /// An atom whose value cannot be expressed, such as `exp(α)` or `log(η)`.
    Unresolvable(String),
    /// The generic expansion differs between cases of the infinitesimal.
    CaseDependent(String),
    /// No nonzero term was found up to the maximal working order.
    InsufficientOrder,
    NotPolynomial(String),
    NotGridPoint(String),
    InvalidInterval,
    NumericFailure(String),
    Arithmetic(ArithmeticError),
}

impl fmt::Display for CalculusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CalculusError::Pole(s) => write!(f, "pole: {}", s),
            CalculusError::Domain(s) => write!(f, "outside the domain: {}", s),
            CalculusError::Unresolvable(s) => write!(f, "unresolvable: {}", s),
            CalculusError::CaseDependent(s) => write!(f, "case dependent: {}", s),
            CalculusError::InsufficientOrder => {
                write!(f, "no nonzero term found up to the maximal expansion order")
            }
            CalculusError::NotPolynomial(s) => write!(f, "not a polynomial: {}", s),
            CalculusError::NotGridPoint(s) => write!(f, "not a grid point: {}", s),
            CalculusError::InvalidInterval => write!(f, "invalid interval: need a < b"),
            CalculusError::NumericFailure(s) => write!(f, "numeric failure: {}", s),
            CalculusError::Arithmetic(e) => write!(f, "{}", e),
        }
    }
}

impl core::error::Error for CalculusError {}

impl From<ArithmeticError> for CalculusError {
    fn from(e: ArithmeticError) -> Self {
        CalculusError::Arithmetic(e)
    }
}
