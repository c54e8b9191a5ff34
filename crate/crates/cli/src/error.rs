use std::path::PathBuf;
use std::process::ExitCode;

use hillgaps_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}:{line}:{column}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Input(String),
    #[error("cannot access {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("invariant failed: {0}")]
    Invariant(String),
    #[error("numerical method failed: {0}")]
    Numerical(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Invariant(_) => 1,
            CliError::Parse { .. } | CliError::Input(_) | CliError::Io { .. } => 2,
            CliError::Numerical(_) => 3,
        })
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Interlacing { .. } => CliError::Invariant(e.to_string()),
            CoreError::Integration { .. }
            | CoreError::BracketNotFound { .. }
            | CoreError::TooFewPoints { .. } => CliError::Numerical(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
