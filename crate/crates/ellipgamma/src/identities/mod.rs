//! Executable registry of every identity under test: seeded residual
//! sampling over parameter domains plus the degeneration-limit checks.

mod domain;
mod limits;
mod registry;
mod report;
mod runner;

pub use domain::{sample_points, SampleDomain, SamplePoint};
pub use limits::{
    limit_rational_check, limit_trig_check, monotone_converging, strictly_decreasing, LimitPoint,
};
pub use registry::{default_registry, IdentityName, IdentitySpec};
pub use report::{ComplexRepr, IdentityReport, ReportPoint};
pub use runner::{
    mult2_log_derivative, residual, residual_metric, run_batch, verify, verify_sequential,
};
