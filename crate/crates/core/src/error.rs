use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("multiplier {multiplier} is not invertible modulo {modulus}")]
    NotAUnit { multiplier: usize, modulus: usize },

    #[error("compression factor {m} does not divide sequence length {v}")]
    BadCompressionFactor { m: usize, v: usize },

    #[error("stage limit exceeded: {0}")]
    StageLimit(String),

    #[error("lifting {zeros} zeros would enumerate 2^{zeros} candidates, above the cap of 2^{cap}")]
    LiftCapExceeded { zeros: u32, cap: u32 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
