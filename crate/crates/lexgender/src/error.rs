use std::path::{Path, PathBuf};

use lexgender_core::classify::ClassifyError;
use lexgender_core::corpus::{InventoryError, MalformedLine, MissingResult};
use lexgender_core::eval::{EvalError, GoldError};
use lexgender_core::grid::GridError;
use lexgender_core::params::ParamsError;
use lexgender_core::TransportError;

use crate::wndb::WndbError;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const TRANSPORT: i32 = 2;
    pub const DATA_FORMAT: i32 = 3;
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: invalid JSON: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error(transparent)]
    Transport(#[from] TransportError),
    #[error(transparent)]
    Wndb(#[from] WndbError),
    #[error("{path}: {source}")]
    Gold { path: PathBuf, source: GoldError },
    #[error("{path}: {source}")]
    Corpus {
        path: PathBuf,
        source: MalformedLine,
    },
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Params(#[from] ParamsError),
    #[error(transparent)]
    Inventory(#[from] InventoryError),
    #[error(transparent)]
    MissingResult(#[from] MissingResult),
}

impl Error {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        Error::Io {
            path: path.to_path_buf(),
            source,
        }
    }

    pub fn json(path: &Path, source: serde_json::Error) -> Self {
        Error::Json {
            path: path.to_path_buf(),
            source,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) | Error::Params(_) => exit::USAGE,
            Error::Io { source, .. } if source.kind() == std::io::ErrorKind::NotFound => {
                exit::USAGE
            }
            Error::Transport(_) | Error::Inventory(_) => exit::TRANSPORT,
            Error::Grid(GridError::Transport(_)) => exit::TRANSPORT,
            Error::Grid(GridError::NonDeterministic(_) | GridError::NoProviders) => exit::USAGE,
            Error::Wndb(WndbError::Io { source, .. })
                if source.kind() == std::io::ErrorKind::NotFound =>
            {
                exit::USAGE
            }
            _ => exit::DATA_FORMAT,
        }
    }
}

impl From<ClassifyError> for Error {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Transport(t) => Error::Transport(t),
            other => Error::Usage(other.to_string()),
        }
    }
}
