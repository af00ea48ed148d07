use std::path::PathBuf;

/// Errors produced by sample ingestion, validation, and test evaluation.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: row {row}: {message}")]
    Parse {
        path: PathBuf,
        row: usize,
        message: String,
    },

    #[error("sample '{label}' is empty")]
    EmptySample { label: String },

    #[error("sample '{label}': non-finite coordinate at index {index}")]
    NonFinite { label: String, index: usize },

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
