//! Jacobi's theta function θ₀(z,τ) = (x;q)(q/x;q) with x = e^{2πiz}.

use num_complex::Complex64;

use crate::config::EvalConfig;
use crate::error::EvalError;
use crate::numerics::pochhammer::qpochhammer;
use crate::numerics::point::{cis_2pi, UpperHalfPoint};

/// θ₀(z,τ): 1-periodic in z, vanishing on z ∈ ℤ + τℤ (within the lattice
/// strip covered by the product). Computed through x = e^{2πiz} only.
pub fn theta0(z: Complex64, tau: &UpperHalfPoint, cfg: &EvalConfig) -> Result<Complex64, EvalError> {
    let x = cis_2pi(z);
    let q = tau.nome();
    if x.norm() == 0.0 {
        return Err(EvalError::Domain(format!(
            "e^(2 pi i z) underflows at Im(z) = {}",
            z.im
        )));
    }
    let a = qpochhammer(x, q, cfg)?;
    let b = qpochhammer(q / x, q, cfg)?;
    let v = a * b;
    if !v.is_finite() {
        return Err(EvalError::Domain("theta0 product overflowed".into()));
    }
    Ok(v)
}
