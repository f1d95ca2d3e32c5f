//! Exact scalars and the truncated graded polynomial algebra.
//!
//! Polynomials live in `Q[λ_1..λ_g, ω_1..ω_n]` where `λ_i` has degree `i` and
//! each `ω_j` has degree 1. Every polynomial carries a truncation degree
//! (`cap`); products silently drop anything above it, and binary operations
//! insist that both sides use the same cap.

mod monomial;
mod poly;
pub mod rational;
mod reduce;

pub use monomial::{Generator, GeneratorSet, Monomial};
pub use poly::GradedPoly;
pub use rational::{int, parse_rational, rat, Rational};
pub use reduce::{is_even_reduced, reduce_lambda_even};
