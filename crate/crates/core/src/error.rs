//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Gram input that is not symmetric, not integral, or not a 3x3 matrix.
    #[error("invalid form: {0}")]
    InvalidForm(String),

    /// Half-integral (non-classical) input is rejected, not rounded.
    #[error("half-integral form rejected: {0}")]
    HalfIntegral(String),

    /// Input is not positive definite.
    #[error("form is not positive definite")]
    NotPositiveDefinite,

    /// Discriminant exceeds the configured enumeration bound.
    #[error("discriminant {0} exceeds bound {1}")]
    BoundExceeded(i64, i64),

    /// An internal invariant failed; indicates bad upstream data or a
    /// formula applied outside its contract.
    #[error("structural invariant violated: {0}")]
    Structural(String),

    /// A closed-form path does not cover the given local data; the caller
    /// must fall back to constructive enumeration.
    #[error("formula contract not applicable: {0}")]
    OutOfContract(String),

    /// Arithmetic overflow in i64/i128 computation.
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }
    pub fn out_of_contract(msg: impl Into<String>) -> Self {
        Error::OutOfContract(msg.into())
    }
}
