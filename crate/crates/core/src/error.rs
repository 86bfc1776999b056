use std::path::PathBuf;

use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("halfspace system is unbounded")]
    Unbounded,
    #[error("halfspace system is infeasible")]
    Empty,
    #[error("point set is not full-dimensional (affine dimension {affine_dim} in R^{ambient_dim})")]
    Degenerate { ambient_dim: usize, affine_dim: usize },
    #[error("origin is not in the interior of the polytope")]
    OriginNotInterior,
    #[error("polytope is not reflexive")]
    NotReflexive,
    #[error("moment matrix is singular")]
    SingularMomentMatrix,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
