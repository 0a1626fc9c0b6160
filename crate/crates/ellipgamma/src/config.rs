//! Evaluation configuration shared by every truncated-product evaluator.

use crate::error::EvalError;

/// Default pole guard, also used by [`crate::numerics::euler_gamma`] which
/// takes no config.
pub const DEFAULT_POLE_GUARD: f64 = 1e-13;

/// Controls truncation targets and guards for all product evaluations.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalConfig {
    /// Target relative truncation error of every infinite product.
    pub eps_rel: f64,
    /// Hard cap on the number of factors taken along each product axis.
    pub max_terms_per_axis: usize,
    /// Any denominator factor with modulus below this raises `PoleProximity`.
    pub pole_guard: f64,
    /// Minimum allowed imaginary part of the modular parameters τ, σ.
    /// Below it term counts explode (no modular acceleration here).
    pub im_floor: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            eps_rel: 1e-12,
            max_terms_per_axis: 512,
            pole_guard: DEFAULT_POLE_GUARD,
            im_floor: 0.05,
        }
    }
}

impl EvalConfig {
    /// Default config with a different truncation target.
    pub fn with_eps_rel(eps_rel: f64) -> Self {
        EvalConfig {
            eps_rel,
            ..EvalConfig::default()
        }
    }

    /// Check the config invariants: `0 < eps_rel < 1`, `pole_guard < eps_rel`,
    /// `im_floor > 0`, at least one term per axis.
    pub fn validate(&self) -> Result<(), EvalError> {
        if !(self.eps_rel > 0.0 && self.eps_rel < 1.0) {
            return Err(EvalError::Parameter(format!(
                "eps_rel must be in (0, 1), got {}",
                self.eps_rel
            )));
        }
        if !(self.pole_guard > 0.0 && self.pole_guard < self.eps_rel) {
            return Err(EvalError::Parameter(format!(
                "pole_guard must be in (0, eps_rel), got {}",
                self.pole_guard
            )));
        }
        if self.im_floor.is_nan() || self.im_floor <= 0.0 {
            return Err(EvalError::Parameter(format!(
                "im_floor must be positive, got {}",
                self.im_floor
            )));
        }
        if self.max_terms_per_axis == 0 {
            return Err(EvalError::Parameter(
                "max_terms_per_axis must be at least 1".into(),
            ));
        }
        Ok(())
    }
}
