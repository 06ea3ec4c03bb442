//! Monomials, monomial orders and homogeneous polynomials over a fixed
//! variable list with the standard grading.

mod monomial;
mod parse;
mod polynomial;

pub use monomial::{Monomial, MonomialOrder, MAX_VARS};
pub use polynomial::{Homogeneity, PolyRing, Polynomial};
