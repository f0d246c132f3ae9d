use thiserror::Error;

use crate::weyl::Kind;

/// Errors produced by the strata library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid root system type {kind}{rank}")]
    InvalidType { kind: Kind, rank: usize },

    #[error("polynomial is not a product of cyclotomic polynomials (left over: {remainder})")]
    NotCyclotomic { remainder: String },

    #[error("class {class} does not belong to type {kind}{rank}")]
    TypeMismatch {
        class: String,
        kind: Kind,
        rank: usize,
    },

    #[error("group of order {order} exceeds the enumeration budget {budget}")]
    BudgetExceeded { order: u64, budget: u64 },

    #[error("commutator left the sp4 matrix pattern at entry ({row}, {col})")]
    PatternViolation { row: usize, col: usize },

    #[error("slice point {point} has centralizer dimension {dim}, expected 2, 4 or 6")]
    UnexpectedCentralizerDim { point: String, dim: usize },

    #[error("slice point {point} lies in X but matches pieces {pieces:?}")]
    PieceViolation { point: String, pieces: Vec<usize> },

    #[error("slice point {0} is not in the closed subvariety X~'")]
    NotInXtilde(String),

    #[error("table data: line {line}: {message}")]
    TableFormat { line: usize, message: String },

    #[error("checksum mismatch for {what}: expected {expected}, found {found}")]
    Checksum {
        what: String,
        expected: String,
        found: String,
    },

    #[error("cache file: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
