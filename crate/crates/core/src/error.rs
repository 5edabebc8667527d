use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Requested level exceeds the configured cap.
    #[error("level {level} exceeds the configured maximum {max}")]
    ResourceLimit { level: u32, max: u32 },

    /// Argument outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Arguments that do not fit together (level or dimension mismatch).
    #[error("usage error: {0}")]
    Usage(String),

    /// A triplet list that does not describe a valid multiplication table.
    #[error("invalid triplet table: {0}")]
    InvalidTable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
