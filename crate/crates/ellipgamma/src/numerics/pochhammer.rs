//! The q-Pochhammer symbol (x;q) = ∏_{j≥0} (1 − x q^j) and the shared
//! geometric-tail truncation bounds.
//!
//! Tail control: |log(1−u)| ≤ |u|/(1−|u|) for |u| < 1, so the neglected
//! log-tail after J factors is at most |x||q|^J / ((1−|q|)(1−|x||q|^J)).

use num_complex::Complex64;

use crate::config::EvalConfig;
use crate::error::EvalError;

/// Value of a truncated Pochhammer product plus bookkeeping the callers
/// need for pole detection and truncation reporting.
#[derive(Debug, Clone, Copy)]
pub struct PochhammerEval {
    pub value: Complex64,
    /// Number of factors taken.
    pub terms: usize,
    /// Smallest |1 − x q^j| over the factors taken.
    pub min_factor_abs: f64,
}

/// Smallest J so the neglected tail of (x;q) satisfies
/// |x||q|^J / ((1−|q|)(1−|x||q|^J)) ≤ eps.
pub fn pochhammer_terms(x_abs: f64, q_abs: f64, cfg: &EvalConfig) -> Result<usize, EvalError> {
    if q_abs.is_nan() || q_abs >= 1.0 {
        return Err(EvalError::Domain(format!("|q| = {q_abs} must be < 1")));
    }
    let eps = cfg.eps_rel;
    let mut tail_head = x_abs; // |x| |q|^j
    let mut j = 0usize;
    loop {
        if tail_head < 1.0 && tail_head / ((1.0 - q_abs) * (1.0 - tail_head)) <= eps {
            return Ok(j);
        }
        j += 1;
        if j > cfg.max_terms_per_axis {
            return Err(EvalError::TermCapExceeded {
                needed: j,
                cap: cfg.max_terms_per_axis,
            });
        }
        tail_head *= q_abs;
    }
}

/// Per-axis order (J, K) for the elliptic gamma double product: the smallest
/// counts with q_abs^J/(1−q_abs) ≤ eps/4 and r_abs^K/(1−r_abs) ≤ eps/4, so the
/// log-tail of the double product stays ≤ eps (one geometric bound per axis
/// and side).
pub fn truncation_order(
    q_abs: f64,
    r_abs: f64,
    eps: f64,
    cfg: &EvalConfig,
) -> Result<(usize, usize), EvalError> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(EvalError::Parameter(format!(
            "eps must be in (0, 1), got {eps}"
        )));
    }
    Ok((axis_terms(q_abs, eps, cfg)?, axis_terms(r_abs, eps, cfg)?))
}

fn axis_terms(a: f64, eps: f64, cfg: &EvalConfig) -> Result<usize, EvalError> {
    if !(0.0..1.0).contains(&a) {
        return Err(EvalError::Domain(format!("|q| = {a} must be < 1")));
    }
    let target = eps / 4.0 * (1.0 - a);
    let mut pow = a;
    let mut j = 1usize;
    while pow > target {
        j += 1;
        if j > cfg.max_terms_per_axis {
            return Err(EvalError::TermCapExceeded {
                needed: j,
                cap: cfg.max_terms_per_axis,
            });
        }
        pow *= a;
    }
    Ok(j)
}

/// (x;q) truncated per `pochhammer_terms`, with factor bookkeeping.
pub fn qpochhammer_eval(
    x: Complex64,
    q: Complex64,
    cfg: &EvalConfig,
) -> Result<PochhammerEval, EvalError> {
    if !x.is_finite() || !q.is_finite() {
        return Err(EvalError::Domain("nonfinite pochhammer argument".into()));
    }
    let terms = pochhammer_terms(x.norm(), q.norm(), cfg)?;
    let mut value = Complex64::new(1.0, 0.0);
    let mut min_factor_abs = f64::INFINITY;
    let mut xq = x;
    for _ in 0..terms {
        let factor = Complex64::new(1.0, 0.0) - xq;
        let fa = factor.norm();
        if fa < min_factor_abs {
            min_factor_abs = fa;
        }
        value *= factor;
        xq *= q;
    }
    if !value.is_finite() {
        return Err(EvalError::Domain("pochhammer product overflowed".into()));
    }
    Ok(PochhammerEval {
        value,
        terms,
        min_factor_abs,
    })
}

/// The q-Pochhammer symbol (x;q) = ∏_{j≥0} (1 − x q^j), |q| < 1.
pub fn qpochhammer(x: Complex64, q: Complex64, cfg: &EvalConfig) -> Result<Complex64, EvalError> {
    qpochhammer_eval(x, q, cfg).map(|e| e.value)
}
