//! Exact dense linear algebra over the Gaussian rationals: nilpotent Jordan
//! types, functionals through the trace pairing, and the nilpotency lemma
//! behind the depth bound.

mod functional;
mod lemma;
mod matrix;

pub use functional::{depth_of_functional, jordan_partition, psi_lambda, psi_tail, LinearFunctional};
pub use lemma::{
    lemma_matrices, random_gaussian_vector, random_rational_vector, sign_vectors, verify_linalg_lemma,
    LinAlgReport, NilpotentReading,
};
pub use matrix::{random_invertible, random_unimodular, ExactMatrix};
