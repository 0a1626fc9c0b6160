//! The elliptic gamma function, its normalized variant, Jackson's q-gamma
//! function, and the elliptic/trigonometric analogs of a number.

use num_complex::Complex64;

use crate::config::EvalConfig;
use crate::error::EvalError;
use crate::numerics::pochhammer::{qpochhammer, qpochhammer_eval, truncation_order};
use crate::numerics::point::{cis_2pi, UpperHalfPoint};
use crate::numerics::theta::theta0;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Γ(z,τ,σ) = ∏_{j,k≥0} (1 − q^{j+1} r^{k+1} x^{−1}) / (1 − q^j r^k x),
/// truncated at the order from [`elliptic_gamma_order`].
pub fn elliptic_gamma(
    z: Complex64,
    tau: &UpperHalfPoint,
    sigma: &UpperHalfPoint,
    cfg: &EvalConfig,
) -> Result<Complex64, EvalError> {
    let order = elliptic_gamma_order(z, tau, sigma, cfg)?;
    elliptic_gamma_at_order(z, tau, sigma, order, cfg)
}

/// Per-axis truncation order for Γ(z,τ,σ): the base order of
/// [`truncation_order`] extended by enough terms to absorb the factor
/// |x|^{±1} the geometric tail bound picks up. Without the extension the
/// bound only holds for |x|, |x|^{−1} ≤ e^{π/2}; arguments like z·τ (inside
/// the normalized gamma) leave that range.
pub fn elliptic_gamma_order(
    z: Complex64,
    tau: &UpperHalfPoint,
    sigma: &UpperHalfPoint,
    cfg: &EvalConfig,
) -> Result<(usize, usize), EvalError> {
    let q_abs = tau.nome().norm();
    let r_abs = sigma.nome().norm();
    let (base_j, base_k) = truncation_order(q_abs, r_abs, cfg.eps_rel, cfg)?;
    let x_abs = cis_2pi(z).norm();
    if x_abs == 0.0 || !x_abs.is_finite() {
        return Err(EvalError::Domain(format!(
            "e^(2 pi i z) leaves f64 range at Im(z) = {}",
            z.im
        )));
    }
    let stretch = x_abs.max(1.0 / x_abs).ln();
    let pad = |axis_abs: f64, base: usize| -> Result<usize, EvalError> {
        let extra = if stretch > 0.0 && axis_abs > 0.0 {
            (stretch / -axis_abs.ln()).ceil() as usize
        } else {
            0
        };
        let total = base + extra;
        if total > cfg.max_terms_per_axis {
            return Err(EvalError::TermCapExceeded {
                needed: total,
                cap: cfg.max_terms_per_axis,
            });
        }
        Ok(total)
    };
    Ok((pad(q_abs, base_j)?, pad(r_abs, base_k)?))
}

/// Γ(z,τ,σ) truncated at an explicit per-axis order (J, K). Exposed so the
/// truncation-honesty checks can double the order and compare.
pub fn elliptic_gamma_at_order(
    z: Complex64,
    tau: &UpperHalfPoint,
    sigma: &UpperHalfPoint,
    (order_j, order_k): (usize, usize),
    cfg: &EvalConfig,
) -> Result<Complex64, EvalError> {
    let x = cis_2pi(z);
    if x.norm() == 0.0 {
        return Err(EvalError::Domain(format!(
            "e^(2 pi i z) underflows at Im(z) = {}",
            z.im
        )));
    }
    let q_pows = powers(tau.nome(), order_j + 1);
    let r_pows = powers(sigma.nome(), order_k + 1);
    let x_inv = ONE / x;

    let mut num = ONE;
    let mut den = ONE;
    let mut min_den_factor = f64::INFINITY;
    for j in 0..order_j {
        for k in 0..order_k {
            num *= ONE - q_pows[j + 1] * r_pows[k + 1] * x_inv;
            let d = ONE - q_pows[j] * r_pows[k] * x;
            let da = d.norm();
            if da < min_den_factor {
                min_den_factor = da;
            }
            den *= d;
        }
    }
    if min_den_factor < cfg.pole_guard {
        return Err(EvalError::PoleProximity(format!(
            "denominator factor of modulus {min_den_factor:.3e} at z = {z} (z near -j*tau - k*sigma mod 1)"
        )));
    }
    let v = num / den;
    if !v.is_finite() {
        return Err(EvalError::Domain(
            "elliptic gamma product overflowed".into(),
        ));
    }
    Ok(v)
}

/// Value of Γ̄ together with branch bookkeeping for the principal power.
#[derive(Debug, Clone, Copy)]
pub struct GammaBarEval {
    pub value: Complex64,
    /// Set when |arg θ₀(τ,σ)| > π/2, where the principal-branch power
    /// θ₀(τ,σ)^{1−z} is sensitive to the branch choice.
    pub branch_warning: bool,
}

/// Γ̄(z,τ,σ) = (q;q)/(r;r) · θ₀(τ,σ)^{1−z} · Γ(zτ,τ,σ), with the power taken
/// as exp((1−z)·Log θ₀(τ,σ)) on the principal branch.
pub fn gamma_bar(
    z: Complex64,
    tau: &UpperHalfPoint,
    sigma: &UpperHalfPoint,
    cfg: &EvalConfig,
) -> Result<Complex64, EvalError> {
    gamma_bar_eval(z, tau, sigma, cfg).map(|e| e.value)
}

/// As [`gamma_bar`], also reporting the branch warning flag.
pub fn gamma_bar_eval(
    z: Complex64,
    tau: &UpperHalfPoint,
    sigma: &UpperHalfPoint,
    cfg: &EvalConfig,
) -> Result<GammaBarEval, EvalError> {
    let q = tau.nome();
    let r = sigma.nome();
    let theta = theta0(tau.tau(), sigma, cfg)?;
    if theta.norm() < cfg.pole_guard {
        return Err(EvalError::PoleProximity(format!(
            "theta0(tau, sigma) has modulus {:.3e}",
            theta.norm()
        )));
    }
    let log_theta = theta.ln();
    let branch_warning = log_theta.im.abs() > std::f64::consts::FRAC_PI_2;
    let prefactor = qpochhammer(q, q, cfg)? / qpochhammer(r, r, cfg)?;
    let power = ((ONE - z) * log_theta).exp();
    let gamma = elliptic_gamma(z * tau.tau(), tau, sigma, cfg)?;
    let value = prefactor * power * gamma;
    if !value.is_finite() {
        return Err(EvalError::Domain("gamma_bar overflowed".into()));
    }
    Ok(GammaBarEval {
        value,
        branch_warning,
    })
}

/// Jackson's q-gamma function Γ_q(z) = (1−q)^{1−z} (q;q) / (q^z;q), with
/// principal-branch powers.
pub fn q_gamma(
    z: Complex64,
    tau: &UpperHalfPoint,
    cfg: &EvalConfig,
) -> Result<Complex64, EvalError> {
    let q = tau.nome();
    let q_to_z = (z * q.ln()).exp();
    let den = qpochhammer_eval(q_to_z, q, cfg)?;
    if den.min_factor_abs < cfg.pole_guard || den.value.norm() < cfg.pole_guard {
        return Err(EvalError::PoleProximity(format!(
            "(q^z; q) vanishes at z = {z}"
        )));
    }
    let num = qpochhammer(q, q, cfg)?;
    let power = ((ONE - z) * (ONE - q).ln()).exp();
    let v = power * num / den.value;
    if !v.is_finite() {
        return Err(EvalError::Domain("q_gamma overflowed".into()));
    }
    Ok(v)
}

/// The trigonometric analog of the number z:
/// [z]_q = (1 − e^{2πiτz}) / (1 − e^{2πiτ}).
pub fn q_number(z: Complex64, tau: &UpperHalfPoint) -> Complex64 {
    (ONE - cis_2pi(tau.tau() * z)) / (ONE - tau.nome())
}

/// The elliptic analog of the number z: θ₀(zτ,σ) / θ₀(τ,σ).
pub fn elliptic_number(
    z: Complex64,
    tau: &UpperHalfPoint,
    sigma: &UpperHalfPoint,
    cfg: &EvalConfig,
) -> Result<Complex64, EvalError> {
    let den = theta0(tau.tau(), sigma, cfg)?;
    if den.norm() < cfg.pole_guard {
        return Err(EvalError::PoleProximity(format!(
            "theta0(tau, sigma) has modulus {:.3e}",
            den.norm()
        )));
    }
    Ok(theta0(z * tau.tau(), sigma, cfg)? / den)
}

fn powers(base: Complex64, count: usize) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(count);
    let mut p = ONE;
    for _ in 0..count {
        out.push(p);
        p *= base;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn im(v: f64) -> UpperHalfPoint {
        UpperHalfPoint::from_im(v, &cfg()).unwrap()
    }

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / (a.norm() + b.norm() + 1e-300)
    }

    #[test]
    fn normalized_at_half_period() {
        let tau = im(0.7);
        let sigma = im(1.1);
        let z = (tau.tau() + sigma.tau()) / 2.0;
        let v = elliptic_gamma(z, &tau, &sigma, &cfg()).unwrap();
        assert!((v - ONE).norm() < 1e-10);
    }

    #[test]
    fn symmetric_in_tau_sigma() {
        let tau = im(0.6);
        let sigma = im(0.9);
        let z = c(0.25, 0.3);
        let a = elliptic_gamma(z, &tau, &sigma, &cfg()).unwrap();
        let b = elliptic_gamma(z, &sigma, &tau, &cfg()).unwrap();
        assert!((a - b).norm() <= 4.0 * cfg().eps_rel * a.norm());
    }

    #[test]
    fn sigma_shift_is_theta_factor() {
        let tau = im(0.8);
        let cfg = cfg();
        let sigma = UpperHalfPoint::new(c(0.5, 0.8), &cfg).unwrap();
        let z = c(0.2, 0.4);
        let lhs = elliptic_gamma(z + sigma.tau(), &tau, &sigma, &cfg).unwrap();
        let rhs = theta0(z, &tau, &cfg).unwrap() * elliptic_gamma(z, &tau, &sigma, &cfg).unwrap();
        assert!(rel(lhs, rhs) < 1e-9);
    }

    #[test]
    fn matches_reference_values() {
        // frozen from the 40-digit brute-force double-product oracle
        let v = elliptic_gamma(c(0.25, 0.3), &im(0.6), &im(0.9), &cfg()).unwrap();
        let want = c(0.9767549137311691027, 0.1529812394513195567);
        assert!((v - want).norm() < 1e-11 * want.norm());

        let v = elliptic_gamma(c(0.2, 0.0), &im(1.0), &im(1.3), &cfg()).unwrap();
        let want = c(0.4989187020815694786, 0.6896731280990013465);
        assert!((v - want).norm() < 1e-11 * want.norm());
    }

    #[test]
    fn pole_raises_error() {
        // z = 0: the (j,k) = (0,0) denominator factor is exactly 1 - x = 0
        let err = elliptic_gamma(c(0.0, 0.0), &im(0.7), &im(1.1), &cfg()).unwrap_err();
        assert!(matches!(err, EvalError::PoleProximity(_)));
    }

    #[test]
    fn vanishes_at_numerator_lattice() {
        // Moderate Im values: the roundoff of the vanishing factor is
        // amplified by the reciprocal factors 1/(q^a r^b), which stay
        // below ~1e6 here so the zero is resolved to < 1e-8.
        let tau = im(0.4);
        let sigma = im(0.55);
        for j in 0..2 {
            for k in 0..2 {
                let z = tau.tau() * (j + 1) as f64 + sigma.tau() * (k + 1) as f64;
                let v = elliptic_gamma(z, &tau, &sigma, &cfg()).unwrap();
                assert!(v.norm() < 1e-8, "|Gamma| = {} at j={j} k={k}", v.norm());
            }
        }
    }

    #[test]
    fn gamma_bar_normalized_at_one() {
        let v = gamma_bar(ONE, &im(0.9), &im(1.3), &cfg()).unwrap();
        assert!((v - ONE).norm() < 1e-10);
    }

    #[test]
    fn gamma_bar_shift_is_elliptic_number() {
        let cfg = cfg();
        let tau = im(0.7);
        let sigma = im(1.2);
        let z = c(0.4, 0.0);
        let lhs = gamma_bar(z + ONE, &tau, &sigma, &cfg).unwrap()
            / gamma_bar(z, &tau, &sigma, &cfg).unwrap();
        let rhs = elliptic_number(z, &tau, &sigma, &cfg).unwrap();
        assert!(rel(lhs, rhs) < 1e-9);
    }

    #[test]
    fn gamma_bar_reference_value() {
        let v = gamma_bar(c(0.4, 0.0), &im(0.7), &im(1.2), &cfg()).unwrap();
        let want = c(1.156269724157013167, 0.0);
        assert!((v - want).norm() < 1e-11 * want.norm());
    }

    #[test]
    fn gamma_bar_branch_warning_fires_on_negative_theta() {
        // Im tau > Im sigma makes the leading (r/q; r) factor negative, so
        // theta0(tau, sigma) < 0 and the principal log has |arg| = pi.
        let e = gamma_bar_eval(c(0.4, 0.0), &im(0.5), &im(0.4), &cfg()).unwrap();
        assert!(e.branch_warning);
        let e = gamma_bar_eval(c(0.4, 0.0), &im(0.5), &im(0.9), &cfg()).unwrap();
        assert!(!e.branch_warning);
    }

    #[test]
    fn q_gamma_normalizations() {
        let tau = im(0.5);
        let v = q_gamma(ONE, &tau, &cfg()).unwrap();
        assert!((v - ONE).norm() < 1e-13);
        let v = q_gamma(c(2.0, 0.0), &tau, &cfg()).unwrap();
        assert!((v - ONE).norm() < 1e-13);
    }

    #[test]
    fn q_gamma_shift_is_q_number() {
        let tau = im(0.5);
        let z = c(0.7, 0.0);
        let lhs = q_gamma(z + ONE, &tau, &cfg()).unwrap();
        let rhs = q_number(z, &tau) * q_gamma(z, &tau, &cfg()).unwrap();
        assert!(rel(lhs, rhs) < 1e-12);
    }

    #[test]
    fn q_gamma_reference_value() {
        let v = q_gamma(c(0.3, 0.0), &im(0.6), &cfg()).unwrap();
        let want = c(1.429203651487172115, 0.0);
        assert!((v - want).norm() < 1e-11 * want.norm());
    }

    #[test]
    fn q_gamma_pole_at_zero() {
        let err = q_gamma(c(0.0, 0.0), &im(0.5), &cfg()).unwrap_err();
        assert!(matches!(err, EvalError::PoleProximity(_)));
    }

    #[test]
    fn q_number_endpoints() {
        let tau = im(0.5);
        assert!((q_number(ONE, &tau) - ONE).norm() < 1e-15);
        assert_eq!(q_number(c(0.0, 0.0), &tau).norm(), 0.0);
    }

    #[test]
    fn q_number_tends_to_z() {
        // [z]_q -> z as tau -> 0; error decreases along t = 0.1, 0.01
        let mut cfg = cfg();
        cfg.im_floor = 1e-3;
        let z = c(2.5, 0.0);
        let e1 = (q_number(z, &UpperHalfPoint::from_im(0.1, &cfg).unwrap()) - z).norm();
        let e2 = (q_number(z, &UpperHalfPoint::from_im(0.01, &cfg).unwrap()) - z).norm();
        assert!(e2 < e1);
    }

    #[test]
    fn elliptic_number_endpoints_and_limit() {
        let cfg = cfg();
        let tau = im(0.4);
        let sigma = im(6.0);
        let v = elliptic_number(ONE, &tau, &sigma, &cfg).unwrap();
        assert!((v - ONE).norm() < 1e-12);
        let v = elliptic_number(c(0.0, 0.0), &tau, &sigma, &cfg).unwrap();
        assert!(v.norm() < 1e-12);
        // |r| = e^{-12 pi} makes the elliptic analog match the trigonometric
        // one to well below 1e-8
        let z = c(0.35, 0.0);
        let en = elliptic_number(z, &tau, &sigma, &cfg).unwrap();
        let qn = q_number(z, &tau);
        assert!((en - qn).norm() < 1e-8);
    }

    #[test]
    fn elliptic_number_reference_value() {
        let v = elliptic_number(c(0.35, 0.0), &im(0.4), &im(0.9), &cfg()).unwrap();
        let want = c(0.659086921179464414, 0.0);
        assert!((v - want).norm() < 1e-11 * want.norm());
    }
}
