//! Independent verification by exact linear algebra on graded pieces.
//!
//! Nothing here trusts the closed-form engine: [`check_exactness`] computes
//! ranks of the engine's maps slice by slice, and
//! [`minimal_resolution_bruteforce`] builds a minimal resolution from
//! scratch and only ever sees the ideal.

mod bruteforce;
mod checks;
mod compare;
mod field;
mod linalg;
mod mutate;
mod piece;

use alloc::string::String;

use thiserror::Error;

pub use bruteforce::minimal_resolution_bruteforce;
pub use checks::{check_complex, check_exactness, check_minimality, verify, CheckKind, CheckRecord, VerificationReport};
pub use compare::{compare_betti, BettiDiff, BettiMismatch};
pub use field::{Field, FieldConfig, PrimeField, Rationals};
pub use linalg::{kernel, rank, Echelon, SparseVec};
pub use mutate::{drop_column, flip_sign, shift_degree};
pub use piece::{graded_piece, GradedPieceMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{0} is not a prime below 2^32")]
    InvalidPrime(u64),
    #[error("unknown field {0:?}, expected \"q\" or \"p:PRIME\"")]
    InvalidField(String),
    #[error("differential is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("degree bound {max_degree} is below {needed}, the least degree of the last stage's generators")]
    TruncationTooSmall { max_degree: u32, needed: u32 },
    #[error("the window needs {needed} stages but the resolution has {built}")]
    NotEnoughStages { needed: usize, built: usize },
}

/// The default degree bound for a stage window: the largest generator
/// degree of `M` times `max_stage + 2`.
pub fn default_max_degree(ring: &crate::monomial::MonomialIdeal, max_stage: usize) -> u32 {
    ring.max_generator_degree().max(1) * (max_stage as u32 + 2)
}
