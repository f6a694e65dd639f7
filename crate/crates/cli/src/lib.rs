//! Command-line calculator for Euclidean numbers.

pub mod command;
pub mod render;
pub mod session;
pub mod syntax;
