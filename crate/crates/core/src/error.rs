//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Matrix shapes are incompatible with the requested operation.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// A self-adjoint matrix was required.
    #[error("matrix is not self-adjoint")]
    NotSelfAdjoint,

    /// Text that does not parse as a number, matrix entry or file.
    #[error("parse error: {0}")]
    Parse(String),

    /// A structurally invalid space file.
    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
