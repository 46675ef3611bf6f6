use thiserror::Error;

/// Errors produced by constructing bases, encoding, parsing, and the
/// analytic operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Bases must satisfy 1 < r <= 10 so every digit fits the characters '0'..'9'.
    #[error("invalid base {0}: supported bases satisfy 1 < r <= 10")]
    InvalidBase(f64),

    /// Operation defined only for integer radixes (2..=10).
    #[error("integer base required, got {0}")]
    IntegerBaseRequired(f64),

    /// Encoding targets must be finite and nonnegative.
    #[error("encoding target must be a finite nonnegative number, got {0}")]
    InvalidTarget(f64),

    /// The error budget attached to an encode request must be positive.
    #[error("error budget must be positive, got {0}")]
    InvalidEpsilon(f64),

    /// A digit larger than the base's alphabet allows.
    #[error("digit {digit} out of range for base (max digit {max_digit})")]
    DigitOutOfRange { digit: u8, max_digit: u8 },

    /// Malformed digit-string input.
    #[error("parse error at position {position}: {reason}")]
    Parse { position: usize, reason: String },

    /// Search intervals must satisfy 1 < lo < hi.
    #[error("invalid search interval [{lo}, {hi}]: require 1 < lo < hi")]
    InvalidInterval { lo: f64, hi: f64 },

    /// Probabilities handed to information measures must lie in (0, 1].
    #[error("probability must lie in (0, 1], got {0}")]
    InvalidProbability(f64),

    /// A probability vector whose sum strays too far from 1.
    #[error("probabilities sum to {sum}, expected 1 within {tolerance:e}")]
    NotNormalized { sum: f64, tolerance: f64 },

    /// Catch-all for parameter preconditions (named in the message).
    #[error("{0}")]
    InvalidParameter(String),

    /// Inputs that must be nonempty.
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
