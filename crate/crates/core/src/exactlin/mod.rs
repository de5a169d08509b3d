//! Exact rational linear algebra and sparse tensor arithmetic.

mod echelon;
pub mod modp;
mod rational;
mod sparse;
mod tensor;

pub use echelon::{inverse, kernel_basis, kernel_of_rows, rank, rank_of_vectors, solve, span_equal, Echelon};
pub use rational::{ParseRationalError, Rational};
pub use sparse::{SparseMatrix, SparseVec};
pub use tensor::{pack, StructureConstants, TensorElement};

/// Shape errors raised by linear-algebra and tensor operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("not a permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("slot {slot} out of range for degree {degree}")]
    SlotOutOfRange { slot: usize, degree: usize },
}

/// Exact rank together with the prime-field alarm verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckedRank {
    pub rank: usize,
    pub modular_agrees: bool,
}

/// Exact rank of a family of vectors plus a GF(p) rank comparison.
pub fn rank_with_alarm(width: usize, vs: &[SparseVec]) -> CheckedRank {
    let rank = rank_of_vectors(width, vs);
    let rp = modp::rank_mod_p(vs, modp::ALARM_PRIME);
    CheckedRank { rank, modular_agrees: rp == rank }
}
