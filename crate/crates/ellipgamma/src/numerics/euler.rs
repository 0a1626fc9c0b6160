//! Reference Euler gamma function for the rational-limit checks.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::config::DEFAULT_POLE_GUARD;
use crate::error::EvalError;

// Lanczos approximation, g = 607/128 with 15 coefficients (Godfrey's set).
// Relative error stays below 1e-13 on Re z in [-10, 30], |Im z| <= 30.
const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS_COEFFS: [f64; 15] = [
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
];

/// Euler Γ(z) via Lanczos with reflection for Re z < 1/2.
pub fn euler_gamma(z: Complex64) -> Result<Complex64, EvalError> {
    if !z.is_finite() {
        return Err(EvalError::Domain("nonfinite gamma argument".into()));
    }
    let nearest = z.re.round();
    if nearest <= 0.0 && (z - Complex64::new(nearest, 0.0)).norm() < DEFAULT_POLE_GUARD {
        return Err(EvalError::PoleProximity(format!(
            "gamma pole at z = {nearest}"
        )));
    }
    let v = if z.re < 0.5 {
        let pi_z = Complex64::new(PI, 0.0) * z;
        Complex64::new(PI, 0.0) / (pi_z.sin() * lanczos(Complex64::new(1.0, 0.0) - z))
    } else {
        lanczos(z)
    };
    if !v.is_finite() {
        return Err(EvalError::Domain("gamma overflowed".into()));
    }
    Ok(v)
}

fn lanczos(z: Complex64) -> Complex64 {
    debug_assert!(z.re >= 0.5);
    let mut acc = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (k, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (z + (k as f64 - 1.0));
    }
    let t = z + (LANCZOS_G - 0.5);
    ((z - 0.5) * t.ln() - t).exp() * (2.0 * PI).sqrt() * acc
}
