use thiserror::Error;

use crate::lu::CriterionReport;
use crate::semifield::Semifield;

/// Errors produced anywhere in the crate.
///
/// Row/column numbers carried by error variants are 1-based, matching the
/// convention used in diagnostic output.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("semifield mismatch: {0} vs {1}")]
    TagMismatch(Semifield, Semifield),
    #[error("payload {payload} is outside the {tag} carrier")]
    CarrierViolation { tag: Semifield, payload: f64 },
    #[error("the zero element has no multiplicative inverse")]
    ZeroNotInvertible,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("index list must be strictly increasing")]
    NotStrictlyIncreasing,
    #[error("matrix is not monomial, hence not invertible")]
    NotInvertible,
    #[error("not a valid permutation image")]
    InvalidPermutation,
    #[error("matrix size {n} exceeds the exhaustive-enumeration cap {cap}")]
    SizeLimitExceeded { n: usize, cap: usize },
    #[error("every permutation product is zero; no diagonal normalization exists")]
    SingularPattern,
    #[error("zero diagonal entry at row {0}")]
    ZeroDiagonal(usize),
    #[error("matrix has no LU factorization ({} criterion violations)", .0.violations.len())]
    NotFactorizable(CriterionReport),
    #[error("matrix is not lower triangular")]
    NotLowerTriangular,
    #[error("matrix is not upper triangular")]
    NotUpperTriangular,
    #[error("right-hand side contains zero entries; regularize the system first")]
    IrregularRhs,
    #[error("inconsistent system: equation {row} has an all-zero left side but a nonzero right side")]
    Inconsistent { row: usize },
    #[error("parse error at line {line}, column {col}: {reason}")]
    Parse { line: usize, col: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
