//! The identity registry: every displayed identity as an executable pair of
//! evaluators over a sample domain.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::config::EvalConfig;
use crate::error::EvalError;
use crate::identities::domain::{SampleDomain, SamplePoint};
use crate::numerics::{
    cis_2pi, elliptic_gamma, elliptic_number, euler_gamma, gamma_bar, q_gamma, q_number,
    qpochhammer, theta0, UpperHalfPoint,
};

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Principal-branch complex power, exp(s·Log w).
fn pow_principal(base: Complex64, exponent: Complex64) -> Complex64 {
    (exponent * base.ln()).exp()
}

/// Registry keys for every identity under test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityName {
    /// sin 2πz = 2 sin πz sin π(z+1/2)
    SineDup,
    /// Γ(2z)√π = 2^{2z−1} Γ(z) Γ(z+1/2)
    Legendre,
    /// Γ_q(2z) Γ_{q²}(1/2) = [2]_q^{2z−1} Γ_{q²}(z) Γ_{q²}(z+1/2)
    Askey,
    /// θ₀(2z,τ) = θ₀(z,τ) θ₀(z+1/2,τ) θ₀(z+τ/2,τ) θ₀(z+(1+τ)/2,τ)
    ThetaDup,
    /// Γ(z+σ) = θ₀(z,τ) Γ(z)
    EgammaShiftSigma,
    /// Γ(z+τ) = θ₀(z,σ) Γ(z)
    EgammaShiftTau,
    /// Γ(z+1) = Γ(z)
    EgammaPeriod,
    /// Γ((τ+σ)/2) = 1
    EgammaNorm,
    /// Γ̄(z+1) = [z]_ell Γ̄(z)
    GammabarShift,
    /// Γ̄(1) = 1
    GammabarNorm,
    /// Γ_q(z+1) = [z]_q Γ_q(z)
    QgammaShift,
    /// first multiplication formula, parameter n
    Mult1,
    /// second multiplication formula, parameter n
    Mult2,
    /// Γ(z,τ,σ) = ∏ Γ(z+aτ+bσ, mτ, nσ), parameters m, n
    Lemma1,
    /// ∏_k Γ(kτ,nτ,σ) = 1/∏_k (q^k; q^n), parameter n
    Lemma2,
}

impl IdentityName {
    pub const ALL: [IdentityName; 15] = [
        IdentityName::SineDup,
        IdentityName::Legendre,
        IdentityName::Askey,
        IdentityName::ThetaDup,
        IdentityName::EgammaShiftSigma,
        IdentityName::EgammaShiftTau,
        IdentityName::EgammaPeriod,
        IdentityName::EgammaNorm,
        IdentityName::GammabarShift,
        IdentityName::GammabarNorm,
        IdentityName::QgammaShift,
        IdentityName::Mult1,
        IdentityName::Mult2,
        IdentityName::Lemma1,
        IdentityName::Lemma2,
    ];

    pub fn key(&self) -> &'static str {
        match self {
            IdentityName::SineDup => "sine_dup",
            IdentityName::Legendre => "legendre",
            IdentityName::Askey => "askey",
            IdentityName::ThetaDup => "theta_dup",
            IdentityName::EgammaShiftSigma => "egamma_shift_sigma",
            IdentityName::EgammaShiftTau => "egamma_shift_tau",
            IdentityName::EgammaPeriod => "egamma_period",
            IdentityName::EgammaNorm => "egamma_norm",
            IdentityName::GammabarShift => "gammabar_shift",
            IdentityName::GammabarNorm => "gammabar_norm",
            IdentityName::QgammaShift => "qgamma_shift",
            IdentityName::Mult1 => "mult1",
            IdentityName::Mult2 => "mult2",
            IdentityName::Lemma1 => "lemma1",
            IdentityName::Lemma2 => "lemma2",
        }
    }

    pub fn uses_n(&self) -> bool {
        matches!(
            self,
            IdentityName::Mult1 | IdentityName::Mult2 | IdentityName::Lemma1 | IdentityName::Lemma2
        )
    }

    pub fn uses_m(&self) -> bool {
        matches!(self, IdentityName::Lemma1)
    }
}

impl fmt::Display for IdentityName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for IdentityName {
    type Err = EvalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdentityName::ALL
            .into_iter()
            .find(|name| name.key() == s)
            .ok_or_else(|| EvalError::Parameter(format!("unknown identity '{s}'")))
    }
}

/// One executable identity: which parameters it consumes, its sample domain,
/// and the two sides as evaluators.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentitySpec {
    pub name: IdentityName,
    pub n: u32,
    pub m: u32,
    pub domain: SampleDomain,
    pub default_tol: f64,
}

impl IdentitySpec {
    /// Build a spec, defaulting n (and m) to 2 where the identity takes them
    /// and rejecting stray parameters otherwise.
    pub fn new(name: IdentityName, n: Option<u32>, m: Option<u32>) -> Result<Self, EvalError> {
        if n.is_some() && !name.uses_n() {
            return Err(EvalError::Parameter(format!(
                "identity '{name}' takes no parameter n"
            )));
        }
        if m.is_some() && !name.uses_m() {
            return Err(EvalError::Parameter(format!(
                "identity '{name}' takes no parameter m"
            )));
        }
        let n = n.unwrap_or(2);
        let m = m.unwrap_or(2);
        if name.uses_n() && n == 0 || name.uses_m() && m == 0 {
            return Err(EvalError::Parameter(
                "multiplication orders must be at least 1".into(),
            ));
        }
        Ok(IdentitySpec {
            name,
            n,
            m,
            domain: SampleDomain::standard(),
            default_tol: 1e-9,
        })
    }

    /// Evaluate (LHS, RHS) at a sample point. `PoleProximity` marks the point
    /// as skippable; other errors abort the run.
    pub fn sides(
        &self,
        p: &SamplePoint,
        cfg: &EvalConfig,
    ) -> Result<(Complex64, Complex64), EvalError> {
        let z = p.z;
        match self.name {
            IdentityName::SineDup => {
                let pi = std::f64::consts::PI;
                let lhs = (2.0 * pi * z).sin();
                let rhs = 2.0 * (pi * z).sin() * (pi * (z + 0.5)).sin();
                Ok((lhs, rhs))
            }
            IdentityName::Legendre => {
                let sqrt_pi = std::f64::consts::PI.sqrt();
                let lhs = euler_gamma(2.0 * z)? * sqrt_pi;
                let rhs = pow_principal(Complex64::new(2.0, 0.0), 2.0 * z - ONE)
                    * euler_gamma(z)?
                    * euler_gamma(z + 0.5)?;
                Ok((lhs, rhs))
            }
            IdentityName::Askey => {
                let tau = UpperHalfPoint::new(p.tau, cfg)?;
                let tau2 = tau.scaled(2, cfg)?;
                let lhs = q_gamma(2.0 * z, &tau, cfg)? * q_gamma(Complex64::new(0.5, 0.0), &tau2, cfg)?;
                let two_q = q_number(Complex64::new(2.0, 0.0), &tau);
                let rhs = pow_principal(two_q, 2.0 * z - ONE)
                    * q_gamma(z, &tau2, cfg)?
                    * q_gamma(z + 0.5, &tau2, cfg)?;
                Ok((lhs, rhs))
            }
            IdentityName::ThetaDup => {
                let tau = UpperHalfPoint::new(p.tau, cfg)?;
                let half_tau = tau.tau() / 2.0;
                let lhs = theta0(2.0 * z, &tau, cfg)?;
                let rhs = theta0(z, &tau, cfg)?
                    * theta0(z + 0.5, &tau, cfg)?
                    * theta0(z + half_tau, &tau, cfg)?
                    * theta0(z + 0.5 + half_tau, &tau, cfg)?;
                Ok((lhs, rhs))
            }
            IdentityName::EgammaShiftSigma => {
                let tau = UpperHalfPoint::new(p.tau, cfg)?;
                let sigma = UpperHalfPoint::new(p.sigma, cfg)?;
                let lhs = elliptic_gamma(z + sigma.tau(), &tau, &sigma, cfg)?;
                let rhs = theta0(z, &tau, cfg)? * elliptic_gamma(z, &tau, &sigma, cfg)?;
                Ok((lhs, rhs))
            }
            IdentityName::EgammaShiftTau => {
                let tau = UpperHalfPoint::new(p.tau, cfg)?;
                let sigma = UpperHalfPoint::new(p.sigma, cfg)?;
                let lhs = elliptic_gamma(z + tau.tau(), &tau, &sigma, cfg)?;
                let rhs = theta0(z, &sigma, cfg)? * elliptic_gamma(z, &tau, &sigma, cfg)?;
                Ok((lhs, rhs))
            }
            IdentityName::EgammaPeriod => {
                let tau = UpperHalfPoint::new(p.tau, cfg)?;
                let sigma = UpperHalfPoint::new(p.sigma, cfg)?;
                let lhs = elliptic_gamma(z + ONE, &tau, &sigma, cfg)?;
                let rhs = elliptic_gamma(z, &tau, &sigma, cfg)?;
                Ok((lhs, rhs))
            }
            IdentityName::EgammaNorm => {
                let tau = UpperHalfPoint::new(p.tau, cfg)?;
                let sigma = UpperHalfPoint::new(p.sigma, cfg)?;
                let half = (tau.tau() + sigma.tau()) / 2.0;
                Ok((elliptic_gamma(half, &tau, &sigma, cfg)?, ONE))
            }
            IdentityName::GammabarShift => {
                let tau = UpperHalfPoint::new(p.tau, cfg)?;
                let sigma = UpperHalfPoint::new(p.sigma, cfg)?;
                let lhs = gamma_bar(z + ONE, &tau, &sigma, cfg)?;
                let rhs =
                    elliptic_number(z, &tau, &sigma, cfg)? * gamma_bar(z, &tau, &sigma, cfg)?;
                Ok((lhs, rhs))
            }
            IdentityName::GammabarNorm => {
                let tau = UpperHalfPoint::new(p.tau, cfg)?;
                let sigma = UpperHalfPoint::new(p.sigma, cfg)?;
                Ok((gamma_bar(ONE, &tau, &sigma, cfg)?, ONE))
            }
            IdentityName::QgammaShift => {
                let tau = UpperHalfPoint::new(p.tau, cfg)?;
                let lhs = q_gamma(z + ONE, &tau, cfg)?;
                let rhs = q_number(z, &tau) * q_gamma(z, &tau, cfg)?;
                Ok((lhs, rhs))
            }
            IdentityName::Mult1 => {
                let tau = UpperHalfPoint::new(p.tau, cfg)?;
                let sigma = UpperHalfPoint::new(p.sigma, cfg)?;
                let n = self.n;
                let lhs = elliptic_gamma(z * n as f64, &tau, &sigma, cfg)?;
                let mut rhs = ONE;
                for k1 in 0..n {
                    for k2 in 0..n {
                        for k3 in 0..n {
                            let shift = (Complex64::new(k1 as f64, 0.0)
                                + tau.tau() * k2 as f64
                                + sigma.tau() * k3 as f64)
                                / n as f64;
                            rhs *= elliptic_gamma(z + shift, &tau, &sigma, cfg)?;
                        }
                    }
                }
                Ok((lhs, rhs))
            }
            IdentityName::Mult2 => self.mult2_sides(z, p, cfg),
            IdentityName::Lemma1 => {
                let tau = UpperHalfPoint::new(p.tau, cfg)?;
                let sigma = UpperHalfPoint::new(p.sigma, cfg)?;
                let (m, n) = (self.m, self.n);
                let tau_m = tau.scaled(m, cfg)?;
                let sigma_n = sigma.scaled(n, cfg)?;
                let lhs = elliptic_gamma(z, &tau, &sigma, cfg)?;
                let mut rhs = ONE;
                for a in 0..m {
                    for b in 0..n {
                        let shift = tau.tau() * a as f64 + sigma.tau() * b as f64;
                        rhs *= elliptic_gamma(z + shift, &tau_m, &sigma_n, cfg)?;
                    }
                }
                Ok((lhs, rhs))
            }
            IdentityName::Lemma2 => {
                let tau = UpperHalfPoint::new(p.tau, cfg)?;
                let sigma = UpperHalfPoint::new(p.sigma, cfg)?;
                let n = self.n;
                let tau_n = tau.scaled(n, cfg)?;
                let mut lhs = ONE;
                let mut rhs = ONE;
                for k in 1..n {
                    lhs *= elliptic_gamma(tau.tau() * k as f64, &tau_n, &sigma, cfg)?;
                    let q_k = cis_2pi(tau.tau() * k as f64);
                    rhs /= qpochhammer(q_k, tau_n.nome(), cfg)?;
                }
                Ok((lhs, rhs))
            }
        }
    }

    /// Γ̄(nz,τ,σ) ∏_{k=1}^{n−1} Γ̄(k/n, nτ, σ)
    ///   = (θ₀(nτ,σ)/θ₀(τ,σ))^{nz−1} ∏_{k=0}^{n−1} Γ̄(z+k/n, nτ, σ).
    ///
    /// The prefactor power is taken as exp((nz−1)·(Log θ₀(nτ,σ) − Log θ₀(τ,σ)))
    /// with principal logs; taking the principal log of the evaluated ratio
    /// instead shifts the result by e^{±2πi(nz−1)} on the part of the domain
    /// where the two theta values have opposite signs.
    fn mult2_sides(
        &self,
        z: Complex64,
        p: &SamplePoint,
        cfg: &EvalConfig,
    ) -> Result<(Complex64, Complex64), EvalError> {
        let tau = UpperHalfPoint::new(p.tau, cfg)?;
        let sigma = UpperHalfPoint::new(p.sigma, cfg)?;
        let n = self.n;
        let tau_n = tau.scaled(n, cfg)?;

        let mut lhs = gamma_bar(z * n as f64, &tau, &sigma, cfg)?;
        for k in 1..n {
            let zk = Complex64::new(k as f64 / n as f64, 0.0);
            lhs *= gamma_bar(zk, &tau_n, &sigma, cfg)?;
        }

        let theta_n = theta0(tau_n.tau(), &sigma, cfg)?;
        let theta_1 = theta0(tau.tau(), &sigma, cfg)?;
        if theta_n.norm() < cfg.pole_guard || theta_1.norm() < cfg.pole_guard {
            return Err(EvalError::PoleProximity(
                "theta0 factor of the elliptic number vanishes".into(),
            ));
        }
        let exponent = z * n as f64 - ONE;
        let mut rhs = (exponent * (theta_n.ln() - theta_1.ln())).exp();
        for k in 0..n {
            rhs *= gamma_bar(z + k as f64 / n as f64, &tau_n, &sigma, cfg)?;
        }
        Ok((lhs, rhs))
    }
}

/// The default registry run by `verify --all`: every scalar identity plus
/// the parametrized ones over n, m ∈ {1,2,3,4}.
pub fn default_registry() -> Vec<IdentitySpec> {
    let mut specs = Vec::new();
    for name in IdentityName::ALL {
        match name {
            IdentityName::Lemma1 => {
                for m in 1..=4 {
                    for n in 1..=4 {
                        specs.push(IdentitySpec::new(name, Some(n), Some(m)).unwrap());
                    }
                }
            }
            _ if name.uses_n() => {
                for n in 1..=4 {
                    specs.push(IdentitySpec::new(name, Some(n), None).unwrap());
                }
            }
            _ => specs.push(IdentitySpec::new(name, None, None).unwrap()),
        }
    }
    specs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_round_trip() {
        for name in IdentityName::ALL {
            assert_eq!(name.key().parse::<IdentityName>().unwrap(), name);
        }
        assert!("not_an_identity".parse::<IdentityName>().is_err());
    }

    #[test]
    fn stray_parameters_rejected() {
        assert!(IdentitySpec::new(IdentityName::Legendre, Some(2), None).is_err());
        assert!(IdentitySpec::new(IdentityName::Mult1, Some(2), Some(2)).is_err());
        assert!(IdentitySpec::new(IdentityName::Lemma1, Some(2), Some(3)).is_ok());
        assert!(IdentitySpec::new(IdentityName::Mult1, Some(0), None).is_err());
    }

    #[test]
    fn registry_covers_parameter_grid() {
        let registry = default_registry();
        assert_eq!(registry.len(), 11 + 4 + 4 + 16 + 4);
        let lemma1_count = registry
            .iter()
            .filter(|s| s.name == IdentityName::Lemma1)
            .count();
        assert_eq!(lemma1_count, 16);
    }

    #[test]
    fn norm_identities_hold_at_a_point() {
        let cfg = EvalConfig::default();
        let p = SamplePoint {
            z: Complex64::new(0.3, 0.1),
            tau: Complex64::new(0.0, 0.7),
            sigma: Complex64::new(0.0, 1.1),
        };
        let spec = IdentitySpec::new(IdentityName::EgammaNorm, None, None).unwrap();
        let (l, r) = spec.sides(&p, &cfg).unwrap();
        assert!((l - r).norm() < 1e-10);
    }
}
