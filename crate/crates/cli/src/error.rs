use std::io;

use thiserror::Error;

/// Failures of a command, split by exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot access {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
    #[error("malformed instance file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid instance file: {0}")]
    Invalid(String),
    #[error("unknown {kind} `{name}`")]
    UnknownName { kind: &'static str, name: String },
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Math(#[from] bihom_core::Error),
}

impl CliError {
    /// 1 for mathematical failures, 2 for usage, parse and I/O problems.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Math(_) => 1,
            _ => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
