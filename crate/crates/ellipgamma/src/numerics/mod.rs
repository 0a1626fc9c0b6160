//! Complex-valued evaluation of the special functions with controlled
//! truncation error.
//!
//! All functions of z are computed through x = e^{2πiz}, so integer shifts
//! of z are periods up to floating rounding. Complex powers use the
//! principal logarithm throughout.

mod euler;
mod gamma;
mod pochhammer;
mod point;
mod theta;

pub use euler::euler_gamma;
pub use gamma::{
    elliptic_gamma, elliptic_gamma_at_order, elliptic_gamma_order, elliptic_number, gamma_bar,
    gamma_bar_eval, q_gamma, q_number, GammaBarEval,
};
pub use pochhammer::{
    pochhammer_terms, qpochhammer, qpochhammer_eval, truncation_order, PochhammerEval,
};
pub use point::{cis_2pi, nome, UpperHalfPoint};
pub use theta::theta0;
