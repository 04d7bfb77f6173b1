use std::path::PathBuf;

use mincut_core::{GeneratorError, ParseError, SolverError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error("{0}")]
    Precondition(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    /// 1 for I/O failures, 2 for malformed input or flags, 3 when the input is
    /// well-formed but the solver cannot accept it.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. }
            | CliError::Parse {
                source: ParseError::Io(_),
                ..
            } => 1,
            CliError::Parse { .. } | CliError::Usage(_) | CliError::Generator(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

impl From<SolverError> for CliError {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::InvalidEpsilon(_) => CliError::Usage(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}
