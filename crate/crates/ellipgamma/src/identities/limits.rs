//! Degeneration-limit checks: elliptic → trigonometric → rational.

use num_complex::Complex64;
use serde::Serialize;

use crate::config::EvalConfig;
use crate::error::EvalError;
use crate::numerics::{euler_gamma, gamma_bar, q_gamma, UpperHalfPoint};

/// One point of a limit study: the grid parameter and the absolute residual.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LimitPoint {
    pub parameter: f64,
    pub residual: f64,
}

/// Residuals |Γ̄(z,τ,i·s) − Γ_q(z,τ)| along increasing Im σ = s. As σ → i∞
/// the normalized elliptic gamma degenerates to the q-gamma function, so the
/// sequence should decrease.
pub fn limit_trig_check(
    z: Complex64,
    tau: &UpperHalfPoint,
    sigma_im_list: &[f64],
    cfg: &EvalConfig,
) -> Result<Vec<LimitPoint>, EvalError> {
    if sigma_im_list.is_empty() {
        return Err(EvalError::Parameter("empty grid".into()));
    }
    if sigma_im_list.windows(2).any(|w| w[0] >= w[1]) || sigma_im_list[0] < 1.0 {
        return Err(EvalError::Parameter(
            "sigma grid must be strictly increasing with all entries >= 1".into(),
        ));
    }
    let trig = q_gamma(z, tau, cfg)?;
    sigma_im_list
        .iter()
        .map(|&s| {
            let sigma = UpperHalfPoint::from_im(s, cfg)?;
            let bar = gamma_bar(z, tau, &sigma, cfg)?;
            Ok(LimitPoint {
                parameter: s,
                residual: (bar - trig).norm(),
            })
        })
        .collect()
}

/// Residuals |Γ_q(z, i·t) − Γ(z)| along decreasing t. As τ → 0 the q-gamma
/// function degenerates to the Euler gamma function; convergence is O(t), so
/// expect the sequence to decrease but not to vanish quickly. Small t is the
/// feasibility boundary: term counts grow like 1/t and `TermCapExceeded` is
/// the honest failure below it (no modular acceleration here).
pub fn limit_rational_check(
    z: Complex64,
    t_list: &[f64],
    cfg: &EvalConfig,
) -> Result<Vec<LimitPoint>, EvalError> {
    if t_list.is_empty() {
        return Err(EvalError::Parameter("empty grid".into()));
    }
    if t_list.windows(2).any(|w| w[0] <= w[1]) || t_list[t_list.len() - 1] < cfg.im_floor {
        return Err(EvalError::Parameter(format!(
            "t grid must be strictly decreasing with all entries >= {}",
            cfg.im_floor
        )));
    }
    let rational = euler_gamma(z)?;
    t_list
        .iter()
        .map(|&t| {
            let tau = UpperHalfPoint::from_im(t, cfg)?;
            let trig = q_gamma(z, &tau, cfg)?;
            Ok(LimitPoint {
                parameter: t,
                residual: (trig - rational).norm(),
            })
        })
        .collect()
}

/// True when the residual sequence strictly decreases.
pub fn strictly_decreasing(points: &[LimitPoint]) -> bool {
    points.windows(2).all(|w| w[1].residual < w[0].residual)
}

/// Monotone verdict with a floating-noise floor: a step counts as decreasing
/// when it strictly drops or has already converged below `noise` (residuals
/// at machine-noise level cannot order reliably).
pub fn monotone_converging(points: &[LimitPoint], noise: f64) -> bool {
    points
        .windows(2)
        .all(|w| w[1].residual < w[0].residual || w[1].residual <= noise)
}
