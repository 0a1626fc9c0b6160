//! Residual reports with canonical JSON and CSV renderings.

use num_complex::Complex64;
use serde::Serialize;

/// Plain re/im pair for serialization.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComplexRepr {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexRepr {
    fn from(v: Complex64) -> Self {
        ComplexRepr { re: v.re, im: v.im }
    }
}

/// The parameter tuple of the worst sample.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReportPoint {
    pub z: ComplexRepr,
    pub tau: ComplexRepr,
    pub sigma: ComplexRepr,
}

/// Residual statistics for one identity over a sampled domain.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    pub n_samples: usize,
    pub seed: u64,
    pub tol: f64,
    pub max_rel_residual: f64,
    pub worst_point: Option<ReportPoint>,
    pub pass: bool,
    pub skipped: usize,
}

impl IdentityReport {
    /// Canonical single-line JSON; field order is fixed by the struct.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// One CSV row: identity,n,m,samples,seed,max_residual,pass
    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{:e},{}",
            self.identity,
            self.n.map(|v| v.to_string()).unwrap_or_default(),
            self.m.map(|v| v.to_string()).unwrap_or_default(),
            self.n_samples,
            self.seed,
            self.max_rel_residual,
            self.pass
        )
    }

    pub const CSV_HEADER: &'static str = "identity,n,m,samples,seed,max_residual,pass";
}
