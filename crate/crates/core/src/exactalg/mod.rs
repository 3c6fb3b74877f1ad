//! Exact scalar arithmetic and exact linear algebra over the rationals.
//!
//! The universal scalar of the crate is [`Poly`], a multivariate polynomial
//! in the structure parameters with [`Rational`] coefficients, kept in a
//! canonical form (graded-lexicographic term order, no zero terms) so that
//! structural equality is semantic equality.

mod matrix;
mod poly;
mod rational;

pub use matrix::{projector_onto, BasisSolver, RatMatrix};
pub use poly::{Monomial, Poly, VarSet};
pub use rational::{format_rational, parse_rational, rat, rat_int, Rational};
