use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] verlinde_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("label data: {0}")]
    Labels(String),
    #[error("cache file {path}: {reason}")]
    Cache { path: String, reason: String },
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// Process exit status for this error: bad input is a usage error,
    /// everything else a failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(
                verlinde_core::Error::InvalidRootDatum(_)
                | verlinde_core::Error::NotInAlcove(_)
                | verlinde_core::Error::NotDominant(_)
                | verlinde_core::Error::NotPrime(_)
                | verlinde_core::Error::PrimeTooSmall { .. }
                | verlinde_core::Error::ParameterRange(_)
                | verlinde_core::Error::DimensionMismatch { .. }
                | verlinde_core::Error::MalformedWord { .. },
            ) => 2,
            _ => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
