//! Ascending chains of subspaces of `Q^n`: comparability, interpolation
//! between comparable chains, graded dimensions and the kernel/cokernel
//! shift of the graded comparison map.

mod chain;
mod lemmas;
mod subspace;

pub use chain::FiltrationChain;
pub use lemmas::{
    check_interpolation, comparable, graded_dims, interpolate, random_comparable_pair,
    random_interleaved_pair, shift_lemma_dims, ShiftReport, ShiftRow,
};
pub use subspace::Subspace;
