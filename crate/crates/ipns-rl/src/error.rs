use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Tensor or vector dimensions do not line up.
    #[error("shape mismatch: {0}")]
    Shape(String),
    /// Input is outside the operation's domain (non-finite, empty, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// A prerequisite estimate is not available yet (e.g. HVD before cut-in).
    #[error("not ready: {0}")]
    NotReady(String),
    /// Not enough stored data to satisfy the request.
    #[error("insufficient data: need {needed}, have {available}")]
    InsufficientData { needed: usize, available: usize },
    /// Invalid configuration value or file.
    #[error("config error: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    /// Failure during a run that is not a configuration problem.
    #[error("runtime error: {0}")]
    Runtime(String),
}

pub type Result<T> = std::result::Result<T, Error>;
