//! Exact combinatorial calculus for derivatives and adduced representations
//! of `GL(n,R)` and `GL(n,C)`, together with exact linear-algebra checks of
//! the supporting lemmas.

pub mod bigrading;
pub mod derivatives;
pub mod error;
pub mod filtrations;
pub mod linalg;
pub mod matrixlab;
pub mod partitions;
pub mod reps;
pub mod scalar;

pub use error::{Error, Result};
