//! Evaluation and verification toolkit for the elliptic gamma function and
//! its relatives.
//!
//! Three layers:
//! - [`numerics`]: complex-valued evaluation of the q-Pochhammer symbol,
//!   Jacobi's θ₀, the elliptic gamma function Γ(z,τ,σ), its normalized
//!   variant Γ̄, Jackson's q-gamma function, the Euler gamma reference, and
//!   the q/elliptic analogs of a number — all with controlled truncation
//!   error from geometric tail bounds.
//! - [`formal`]: exact symbolic verification of the multiplication formulas
//!   by factor-multiset rearrangement and truncated integer power series.
//! - [`identities`]: a registry of every identity as an executable check,
//!   verified by seeded residual sampling, plus degeneration-limit studies.
//!
//! With the default `parallel` feature, residual sampling fans out across a
//! rayon pool; reports are bit-identical to sequential execution.

pub mod config;
pub mod error;
pub mod formal;
pub mod identities;
pub mod numerics;
mod parallel;

pub use config::EvalConfig;
pub use error::{EvalError, FormalError};
