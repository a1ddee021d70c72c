use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by every fallible operation in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("series too short: need at least {required} observations, got {actual}")]
    TooShort { required: usize, actual: usize },

    #[error("zero variance: {0}")]
    ZeroVariance(String),

    #[error("singular or degenerate design: {0}")]
    Singular(String),

    #[error("optimizer did not converge: {0}")]
    NonConvergence(String),

    #[error("parameter at admissible-region boundary: {0}")]
    AtBoundary(String),

    #[error("matrix is not positive definite")]
    NotPositiveDefinite,

    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("missing column `{0}`")]
    MissingColumn(String),

    #[error("no parseable rows in input")]
    NoRows,

    #[error("duplicate date `{0}`")]
    DuplicateDate(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
