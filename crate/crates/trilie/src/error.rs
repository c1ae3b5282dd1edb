//! Crate-wide error type.
//!
//! Errors are reserved for malformed input and internal inconsistency; a
//! *mathematical* failure (an identity that does not hold) is not an error
//! but a negative [`crate::report::Verification`], so callers can distinguish
//! "the file is broken" from "the object fails its defining equations".

/// Error cases shared by every module.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Shapes or index ranges do not line up.
    #[error("dimension mismatch: {0}")]
    Dim(String),
    /// Structurally invalid input (bad literal, dependent basis, unverified
    /// prerequisite object, out-of-budget search, ...).
    #[error("invalid input: {0}")]
    Input(String),
    /// An internal consistency guarantee was violated; indicates a broken
    /// artifact rather than bad user data.
    #[error("inconsistent state: {0}")]
    Logic(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
