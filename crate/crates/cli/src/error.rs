use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] quantset::Error),

    #[error("{0}")]
    Usage(String),

    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path} is not a fit file: {source}")]
    FitFile {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

impl CliError {
    /// 2 for bad input, 3 for estimation that did not converge, 4 for I/O.
    pub fn exit_code(&self) -> u8 {
        use quantset::Error as E;
        match self {
            CliError::Lib(E::Io { .. }) => 4,
            CliError::Lib(E::Csv(e)) if e.is_io_error() => 4,
            CliError::Lib(E::NonConvergence(_) | E::AtBoundary(_)) => 3,
            CliError::Lib(_) | CliError::Usage(_) | CliError::FitFile { .. } => 2,
            CliError::Write { .. } | CliError::Read { .. } => 4,
        }
    }
}
