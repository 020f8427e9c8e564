//! Error type shared by all modules.

use thiserror::Error;

/// Errors produced by tensor ops, model plumbing, data ingestion, and the
/// analysis suites.
#[derive(Debug, Error)]
pub enum Error {
    /// Tensor shapes do not line up for the requested operation.
    #[error("shape error: {0}")]
    Shape(String),

    /// A configuration value is out of range or inconsistent.
    #[error("config error: {0}")]
    Config(String),

    /// A file does not match its declared binary or text format.
    #[error("format error: {0}")]
    Format(String),

    /// An index (label, coordinate, node id) is out of bounds.
    #[error("index error: {0}")]
    Index(String),

    /// A computation produced or received a non-finite value.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// An internal API contract was violated (e.g. backward from a non-scalar).
    #[error("contract error: {0}")]
    Contract(String),

    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Process exit code for the CLI: 1 usage, 2 data/format, 3 numeric.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Domain(_) => 1,
            Error::Shape(_)
            | Error::Format(_)
            | Error::Index(_)
            | Error::Contract(_)
            | Error::Io { .. } => 2,
            Error::Numeric(_) => 3,
        }
    }

    pub(crate) fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        Error::Io {
            path: path.display().to_string(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
