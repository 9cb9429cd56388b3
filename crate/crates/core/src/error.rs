use thiserror::Error;

/// Errors raised by the library. Numerical failures of the Bethe solver carry
/// the homotopy parameter at which they happened.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("index {index} out of range {range}")]
    Index { index: usize, range: &'static str },

    #[error("zero spectral parameter at position {0}")]
    ZeroSpectral(usize),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("pole in Bethe equations: denominator {i},{j} vanishes")]
    Pole { i: usize, j: usize },

    #[error("coincident arguments z[{i}] = z[{j}]")]
    Coincident { i: usize, j: usize },

    #[error("continuation failed at s = {s}: {reason}")]
    Continuation { s: f64, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
