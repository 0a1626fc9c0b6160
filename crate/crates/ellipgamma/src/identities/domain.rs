//! Sample domains and seeded, order-independent point generation.

use num_complex::Complex64;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::EvalError;

/// Axis-aligned boxes for the sampled parameters. τ and σ are drawn purely
/// imaginary (the boxes cover their imaginary parts only), which keeps the
/// nomes positive real and principal branches unambiguous.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleDomain {
    pub re_z: (f64, f64),
    pub im_z: (f64, f64),
    pub im_tau: (f64, f64),
    pub im_sigma: (f64, f64),
}

impl SampleDomain {
    /// The standard identity-test domain: Re z ∈ [0.05, 0.95],
    /// Im z ∈ [0, 0.25], Im τ, Im σ ∈ [0.4, 1.5]. Keeps |q|, |r| ≤ e^{−0.8π}
    /// and |x|^{±1} ≤ e^{π/2}, so products stay short and the truncation
    /// bound's prefactor constant applies.
    pub fn standard() -> Self {
        SampleDomain {
            re_z: (0.05, 0.95),
            im_z: (0.0, 0.25),
            im_tau: (0.4, 1.5),
            im_sigma: (0.4, 1.5),
        }
    }

    pub fn validate(&self, im_floor: f64) -> Result<(), EvalError> {
        for (lo, hi) in [self.re_z, self.im_z, self.im_tau, self.im_sigma] {
            if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
                return Err(EvalError::Parameter(format!(
                    "malformed domain box [{lo}, {hi}]"
                )));
            }
        }
        if self.im_tau.0 < im_floor || self.im_sigma.0 < im_floor {
            return Err(EvalError::Parameter(format!(
                "domain reaches below the convergence floor {im_floor}"
            )));
        }
        Ok(())
    }
}

/// One sampled parameter tuple.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplePoint {
    pub z: Complex64,
    pub tau: Complex64,
    pub sigma: Complex64,
}

/// Uniform-in-box f64 from the next 53 random bits.
fn unit_f64(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

fn draw(rng: &mut ChaCha8Rng, (lo, hi): (f64, f64)) -> f64 {
    lo + (hi - lo) * unit_f64(rng)
}

/// The full deterministic sample sequence for a seed: four draws per point
/// (re z, im z, im τ, im σ) in fixed order, independent of how the points
/// are later consumed.
pub fn sample_points(domain: &SampleDomain, count: usize, seed: u64) -> Vec<SamplePoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let re_z = draw(&mut rng, domain.re_z);
            let im_z = draw(&mut rng, domain.im_z);
            let im_tau = draw(&mut rng, domain.im_tau);
            let im_sigma = draw(&mut rng, domain.im_sigma);
            SamplePoint {
                z: Complex64::new(re_z, im_z),
                tau: Complex64::new(0.0, im_tau),
                sigma: Complex64::new(0.0, im_sigma),
            }
        })
        .collect()
}
