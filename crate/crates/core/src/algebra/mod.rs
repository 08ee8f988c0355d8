//! Exact linear algebra and graded bookkeeping shared by the cohomology code.

mod complex;
mod graded;
mod matrix;
mod polynomial;
mod tables;

pub use complex::{f_vector, f_vector_of, h_from_f, MAX_NON_FACES};
pub use graded::{graded_quotient_dims, monomials_of_degree, Exponent, Polynomial};
pub(crate) use graded::exponent_of;
pub use matrix::{integer_rank, RationalMatrix, Rref};
pub use polynomial::IntPolynomial;
pub use tables::{BettiPolynomial, WeightedBettiTable};
