//! Modular parameters on the upper half-plane and their nomes.

use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::config::EvalConfig;
use crate::error::EvalError;

/// e^{2πi·z}, with Re z reduced mod 1 first so that integer shifts of z map
/// to bit-identical results (integer shifts are exact periods of the map).
pub fn cis_2pi(z: Complex64) -> Complex64 {
    let radius = (-TAU * z.im).exp();
    Complex64::from_polar(radius, TAU * z.re.rem_euclid(1.0))
}

/// The nome q = e^{2πi·tau} of a modular parameter.
///
/// Fails with `DomainError` when Im τ is below the configured floor: the
/// defining products converge too slowly there to honor the term caps.
pub fn nome(tau: Complex64, cfg: &EvalConfig) -> Result<Complex64, EvalError> {
    if !tau.is_finite() {
        return Err(EvalError::Domain("tau must be finite".into()));
    }
    if tau.im < cfg.im_floor {
        return Err(EvalError::Domain(format!(
            "Im(tau) = {} is below the floor {}",
            tau.im, cfg.im_floor
        )));
    }
    let q = cis_2pi(tau);
    if q.norm() == 0.0 {
        return Err(EvalError::Domain(format!(
            "nome underflows to zero at Im(tau) = {}",
            tau.im
        )));
    }
    Ok(q)
}

/// A modular parameter τ with Im τ > 0 together with its cached nome.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UpperHalfPoint {
    tau: Complex64,
    nome: Complex64,
}

impl UpperHalfPoint {
    pub fn new(tau: Complex64, cfg: &EvalConfig) -> Result<Self, EvalError> {
        Ok(UpperHalfPoint {
            tau,
            nome: nome(tau, cfg)?,
        })
    }

    /// Purely imaginary τ = i·im.
    pub fn from_im(im: f64, cfg: &EvalConfig) -> Result<Self, EvalError> {
        Self::new(Complex64::new(0.0, im), cfg)
    }

    /// k·τ, whose nome is exactly q^k; used for evaluating at nome powers.
    pub fn scaled(&self, k: u32, cfg: &EvalConfig) -> Result<Self, EvalError> {
        Self::new(self.tau * k as f64, cfg)
    }

    pub fn tau(&self) -> Complex64 {
        self.tau
    }

    pub fn nome(&self) -> Complex64 {
        self.nome
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    const CFG: fn() -> EvalConfig = EvalConfig::default;

    #[test]
    fn nome_at_i_is_exp_minus_two_pi() {
        // direct exponential evaluation: e^{-2π} = 1.8674427317e-3
        let q = nome(Complex64::new(0.0, 1.0), &CFG()).unwrap();
        assert!((q.re - 1.8674427317e-3).abs() < 1e-12);
        assert_eq!(q.im, 0.0);
    }

    #[test]
    fn nome_at_half_i_is_positive_real() {
        let q = nome(Complex64::new(0.0, 0.5), &CFG()).unwrap();
        assert!((q.norm() - (-PI).exp()).abs() < 1e-16);
        assert_eq!(q.arg(), 0.0);
    }

    #[test]
    fn nome_half_plus_i_flips_sign() {
        let q = nome(Complex64::new(0.5, 1.0), &CFG()).unwrap();
        assert!((q.re + (-2.0 * PI).exp()).abs() < 1e-18);
        assert!(q.im.abs() < 1e-18);
    }

    #[test]
    fn nome_rejects_low_imaginary_part() {
        let err = nome(Complex64::new(0.0, 0.01), &CFG()).unwrap_err();
        assert!(matches!(err, EvalError::Domain(_)));
    }

    #[test]
    fn cis_is_exactly_one_periodic() {
        let z = Complex64::new(0.3, 0.1);
        let a = cis_2pi(z);
        let b = cis_2pi(z + Complex64::new(1.0, 0.0));
        assert!((a - b).norm() < 1e-15 * a.norm());
    }

    #[test]
    fn scaled_point_nome_is_power() {
        let cfg = CFG();
        let p = UpperHalfPoint::new(Complex64::new(0.0, 0.4), &cfg).unwrap();
        let p3 = p.scaled(3, &cfg).unwrap();
        let q3 = p.nome().powu(3);
        assert!((p3.nome() - q3).norm() <= 1e-14 * q3.norm());
    }
}
