//! Crate-wide error type.

use std::path::PathBuf;

/// Errors produced by generators, feature extraction, detection, and
/// predictor training.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A non-finite sample entered a streaming component.
    #[error("non-finite sample at step {step}")]
    NonFiniteSample { step: u64 },

    /// The detector saw a non-finite sample earlier and refuses further
    /// steps until reset.
    #[error("detector stream poisoned at step {step}; call reset() before stepping again")]
    StreamPoisoned { step: u64 },

    /// Training produced a non-finite loss; the model was rolled back.
    #[error("training diverged: {0}")]
    Diverged(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// CSV parse failure with the offending 1-based row.
    #[error("{}: row {row}: {msg}", path.display())]
    Csv {
        path: PathBuf,
        row: usize,
        msg: String,
    },

    #[error("snapshot: {0}")]
    Snapshot(String),
}

impl Error {
    pub fn invalid_input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
