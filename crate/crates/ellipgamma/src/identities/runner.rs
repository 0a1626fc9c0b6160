//! Seeded residual sampling with order-independent aggregation.

use num_complex::Complex64;

use crate::config::EvalConfig;
use crate::error::EvalError;
use crate::identities::domain::{sample_points, SamplePoint};
use crate::identities::registry::IdentitySpec;
use crate::identities::report::{IdentityReport, ReportPoint};
use crate::parallel::map_indexed;

/// Scale-free discrepancy |L−R| / (|L| + |R| + 1e−300) between the two sides.
pub fn residual_metric(lhs: Complex64, rhs: Complex64) -> f64 {
    (lhs - rhs).norm() / (lhs.norm() + rhs.norm() + 1e-300)
}

/// Residual of one identity at one sample point.
pub fn residual(
    spec: &IdentitySpec,
    point: &SamplePoint,
    cfg: &EvalConfig,
) -> Result<f64, EvalError> {
    spec.sides(point, cfg).map(|(l, r)| residual_metric(l, r))
}

fn reduce(
    spec: &IdentitySpec,
    points: &[SamplePoint],
    outcomes: Vec<Result<f64, EvalError>>,
    seed: u64,
    tol: f64,
) -> Result<IdentityReport, EvalError> {
    let n_samples = points.len();
    let mut skipped = 0usize;
    let mut max_rel_residual = 0.0f64;
    let mut worst: Option<&SamplePoint> = None;
    for (point, outcome) in points.iter().zip(outcomes) {
        match outcome {
            Ok(res) => {
                if res > max_rel_residual || worst.is_none() {
                    max_rel_residual = res.max(max_rel_residual);
                    worst = Some(point);
                }
            }
            Err(EvalError::PoleProximity(_)) => skipped += 1,
            Err(other) => return Err(other),
        }
    }
    if skipped * 20 > n_samples {
        return Err(EvalError::TooManySkips {
            skipped,
            total: n_samples,
        });
    }
    Ok(IdentityReport {
        identity: spec.name.key().to_string(),
        n: spec.name.uses_n().then_some(spec.n),
        m: spec.name.uses_m().then_some(spec.m),
        n_samples,
        seed,
        tol,
        max_rel_residual,
        worst_point: worst.map(|p| ReportPoint {
            z: p.z.into(),
            tau: p.tau.into(),
            sigma: p.sigma.into(),
        }),
        pass: max_rel_residual <= tol,
        skipped,
    })
}

/// Verify one identity over `n_samples` seeded samples of its domain.
///
/// Sample points are generated sequentially from the seed before any
/// evaluation, residuals are computed per index (in parallel when the
/// `parallel` feature is active), and the reduction scans in index order —
/// the report is identical across thread counts.
pub fn verify(
    spec: &IdentitySpec,
    n_samples: usize,
    seed: u64,
    tol: f64,
    cfg: &EvalConfig,
) -> Result<IdentityReport, EvalError> {
    verify_inner(spec, n_samples, seed, tol, cfg, false)
}

/// As [`verify`], forcing single-threaded evaluation regardless of features.
pub fn verify_sequential(
    spec: &IdentitySpec,
    n_samples: usize,
    seed: u64,
    tol: f64,
    cfg: &EvalConfig,
) -> Result<IdentityReport, EvalError> {
    verify_inner(spec, n_samples, seed, tol, cfg, true)
}

fn verify_inner(
    spec: &IdentitySpec,
    n_samples: usize,
    seed: u64,
    tol: f64,
    cfg: &EvalConfig,
    force_sequential: bool,
) -> Result<IdentityReport, EvalError> {
    if n_samples == 0 {
        return Err(EvalError::Parameter("n_samples must be at least 1".into()));
    }
    cfg.validate()?;
    spec.domain.validate(cfg.im_floor)?;
    let points = sample_points(&spec.domain, n_samples, seed);
    let outcomes = if force_sequential {
        (0..points.len())
            .map(|i| residual(spec, &points[i], cfg))
            .collect()
    } else {
        map_indexed(points.len(), |i| residual(spec, &points[i], cfg))
    };
    reduce(spec, &points, outcomes, seed, tol)
}

/// Run a batch of identity specs with shared settings, preserving order.
/// Entries fail independently; each slot carries its report or error.
pub fn run_batch(
    specs: &[IdentitySpec],
    n_samples: usize,
    seed: u64,
    tol: f64,
    cfg: &EvalConfig,
) -> Vec<Result<IdentityReport, EvalError>> {
    specs
        .iter()
        .map(|spec| verify(spec, n_samples, seed, tol, cfg))
        .collect()
}

/// Branch-free supplement for the second multiplication formula: the
/// logarithmic z-derivative of the LHS/RHS ratio estimated through values
/// only, (f(z+h) − f(z−h)) / (2h·f(z)). Independent of any branch choice in
/// the prefactor power.
pub fn mult2_log_derivative(
    spec: &IdentitySpec,
    point: &SamplePoint,
    step: f64,
    cfg: &EvalConfig,
) -> Result<f64, EvalError> {
    let ratio = |z: Complex64| -> Result<Complex64, EvalError> {
        let shifted = SamplePoint { z, ..*point };
        let (l, r) = spec.sides(&shifted, cfg)?;
        if r.norm() == 0.0 {
            return Err(EvalError::PoleProximity("rhs vanished".into()));
        }
        Ok(l / r)
    };
    let h = Complex64::new(step, 0.0);
    let plus = ratio(point.z + h)?;
    let minus = ratio(point.z - h)?;
    let center = ratio(point.z)?;
    Ok(((plus - minus) / (2.0 * step * center)).norm())
}
