use thiserror::Error;

use crate::kgraph::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("tuple {entries:?} is not strictly increasing within 1..={k}")]
    InvalidTuple { entries: Vec<usize>, k: usize },

    #[error("coordinate position {index} out of range 1..={len}")]
    PositionOutOfRange { index: usize, len: usize },

    #[error("tuple {0} does not end in the top coordinate {1}")]
    NotInPlusBlock(String, usize),

    #[error("tuple {0} uses coordinate {1}, which is outside rank {2}")]
    EntryOutsideRank(String, usize, usize),

    #[error("coordinate {index} out of range 1..={k}")]
    CoordinateOutOfRange { index: usize, k: usize },

    #[error("degree {degree} out of range 1..={k}")]
    DegreeOutOfRange { degree: usize, k: usize },

    #[error("{0}")]
    Structure(String),

    #[error("graph violates the standing hypotheses: {0}")]
    Invalid(ValidationReport),

    #[error("permutation {0:?} is not a bijection of 1..=k")]
    InvalidPermutation(Vec<usize>),

    #[error(
        "boundary composition d{degree} . d{} is nonzero at ({row}, {col}): {value}",
        degree + 1
    )]
    NotAComplex {
        degree: usize,
        row: usize,
        col: usize,
        value: String,
    },

    #[error("homology list has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },

    #[error("at least one co-adjacency scalar must be nonzero")]
    AllZero,

    #[error("empty list of two-term complexes")]
    Empty,
}
