//! Exact arithmetic for a computable fragment of a non-Archimedean Euclidean
//! field.
//!
//! Elements are fractions of finite-support series in the infinite unit
//! `α`, its rational powers, and the atom `2^α`, with rational coefficients.
//! On top of the field the crate provides:
//!
//! - [`number`]: field operations, the total order, classification into
//!   infinitesimal / finite / infinite, standard part, center, monads and
//!   galaxies.
//! - [`seq`]: α-limits of closed-form integer sequences.
//! - [`numerosity`]: numerosities of a decidable algebra of set expressions.
//! - [`ordinal`]: Cantor normal forms with the natural (Hessenberg) sum and
//!   product and their embedding into the field.
//! - [`calculus`]: truncated expansions at `x₀ ± η`, one-sided and mean
//!   derivatives, hyperfinite power sums and the integral over the uniform
//!   α-step grid.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod calculus;
pub mod exponent;
pub mod number;
pub mod numerosity;
pub mod ordinal;
pub mod rational;
pub mod seq;
pub mod series;

pub use exponent::Exponent;
pub use number::{ArithmeticError, EuclideanNumber, Kind, Monomial, NumberClass, Sign};
pub use numerosity::{numerosity, subset_check, NumerosityError, SetExpr, SubsetVerdict};
pub use ordinal::{Ordinal, OrdinalError};
pub use rational::Rational;
pub use seq::{alpha_limit, SeqExpr};
pub use series::{Coefficient, Series, SeriesPoly};
