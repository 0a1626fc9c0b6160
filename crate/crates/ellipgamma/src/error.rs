//! Error types for numeric evaluation and exact verification.

use thiserror::Error;

/// Errors raised by the numeric evaluators and the identity runner.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    /// Input outside the region where the defining products converge.
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed or inconsistent arguments.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A denominator factor (or a whole denominator) is within the pole
    /// guard of zero; the value would be meaningless in f64.
    #[error("pole proximity: {0}")]
    PoleProximity(String),

    /// The truncation bound cannot be met within the per-axis term cap.
    #[error("term cap exceeded: {needed} terms needed, cap is {cap}")]
    TermCapExceeded { needed: usize, cap: usize },

    /// More than 5% of the samples of a verification run were pole-proximate.
    #[error("too many pole-proximate samples: {skipped} of {total}")]
    TooManySkips { skipped: usize, total: usize },
}

/// Errors raised by the exact factor-multiset and power-series machinery.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FormalError {
    /// Malformed or mutually inconsistent arguments (mismatched root order,
    /// cutoff or truncation degree, shift denominators not dividing the order).
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// Reciprocal requested of a series whose constant coefficient is not ±1.
    #[error("series not invertible: constant coefficient is {0}, expected 1 or -1")]
    NotInvertible(String),
}
