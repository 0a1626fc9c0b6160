//! Output records and their JSON / CSV / human renderings. JSON documents
//! are single-line and byte-stable for fixed inputs: field order comes from
//! the struct definitions.

use num_bigint::BigInt;
use num_complex::Complex64;
use serde::Serialize;

use ellipgamma::error::{EvalError, FormalError};
use ellipgamma::formal::Mismatch;
use ellipgamma::identities::{ComplexRepr, IdentityReport, LimitPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Human,
}

pub fn complex_repr(v: Complex64) -> ComplexRepr {
    ComplexRepr { re: v.re, im: v.im }
}

#[derive(Serialize, Default)]
pub struct EvalInputs {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<ComplexRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<ComplexRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<ComplexRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<ComplexRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<ComplexRepr>,
}

#[derive(Serialize)]
pub struct Truncation {
    #[serde(rename = "J")]
    pub j: usize,
    #[serde(rename = "K", skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

#[derive(Serialize)]
pub struct EvalRecord {
    pub function: String,
    pub inputs: EvalInputs,
    pub value: ComplexRepr,
    pub truncation: Option<Truncation>,
    pub warnings: Vec<String>,
}

impl EvalRecord {
    pub fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Json => Ok(serde_json::to_string(self).expect("record serializes")),
            Format::Human => {
                let mut line = format!(
                    "{}(...) = {}",
                    self.function,
                    super::parse::format_complex(Complex64::new(self.value.re, self.value.im))
                );
                if let Some(t) = &self.truncation {
                    line.push_str(&format!("  [J={}", t.j));
                    if let Some(k) = t.k {
                        line.push_str(&format!(", K={k}"));
                    }
                    line.push(']');
                }
                for w in &self.warnings {
                    line.push_str(&format!("  (warning: {w})"));
                }
                Ok(line)
            }
            Format::Csv => Err("csv output is defined for identity reports only".into()),
        }
    }
}

#[derive(Serialize)]
pub struct VerifyAllRecord {
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    pub eps_rel: f64,
    pub reports: Vec<IdentityReport>,
    pub failed: usize,
    pub pass: bool,
}

pub fn render_report_human(r: &IdentityReport) -> String {
    let verdict = if r.pass { "PASS" } else { "FAIL" };
    let params = match (r.n, r.m) {
        (Some(n), Some(m)) => format!(" m={m} n={n}"),
        (Some(n), None) => format!(" n={n}"),
        _ => String::new(),
    };
    format!(
        "{verdict} {}{params}  max_residual={:.3e}  (samples={}, seed={}, skipped={})",
        r.identity, r.max_rel_residual, r.n_samples, r.seed, r.skipped
    )
}

#[derive(Serialize)]
pub struct FormalRecord {
    pub identity: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    pub n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
    pub pass: bool,
    pub first_mismatch: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<serde_json::Value>>,
}

impl FormalRecord {
    pub fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Json => Ok(serde_json::to_string(self).expect("record serializes")),
            Format::Human => {
                let verdict = if self.pass { "PASS" } else { "FAIL" };
                let mut line = format!("{verdict} {} ", self.identity);
                if let Some(m) = self.m {
                    line.push_str(&format!("m={m} "));
                }
                line.push_str(&format!("n={}", self.n));
                if let Some(c) = self.cutoff {
                    line.push_str(&format!(" cutoff={c}"));
                }
                if let Some(d) = self.degree {
                    line.push_str(&format!(" degree={d}"));
                }
                if let Some(mm) = &self.first_mismatch {
                    line.push_str(&format!("  first_mismatch={mm}"));
                }
                Ok(line)
            }
            Format::Csv => Err("csv output is defined for identity reports only".into()),
        }
    }
}

pub fn coefficient_values(coeffs: &[BigInt]) -> Vec<serde_json::Value> {
    coeffs
        .iter()
        .map(|c| match i64::try_from(c) {
            Ok(v) => serde_json::Value::from(v),
            Err(_) => serde_json::Value::from(c.to_string()),
        })
        .collect()
}

pub fn mismatch_value(m: &Mismatch) -> serde_json::Value {
    match m {
        Mismatch::FactorDiff { only_lhs, only_rhs } => serde_json::json!({
            "kind": "factor_diff",
            "only_lhs": only_lhs.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            "only_rhs": only_rhs.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        }),
        Mismatch::IncompleteFamily { factor } => serde_json::json!({
            "kind": "incomplete_family",
            "factor": factor.to_string(),
        }),
        Mismatch::Coefficient {
            q_deg,
            r_deg,
            lhs,
            rhs,
        } => serde_json::json!({
            "kind": "coefficient",
            "q_deg": q_deg,
            "r_deg": r_deg,
            "lhs": lhs.to_string(),
            "rhs": rhs.to_string(),
        }),
        Mismatch::RDependence { q_deg, r_deg, coeff } => serde_json::json!({
            "kind": "r_dependence",
            "q_deg": q_deg,
            "r_deg": r_deg,
            "coeff": coeff.to_string(),
        }),
    }
}

#[derive(Serialize)]
pub struct LimitsRecord {
    pub which: String,
    pub z: ComplexRepr,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<ComplexRepr>,
    pub points: Vec<LimitPoint>,
    pub monotone_decreasing: bool,
    pub final_residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub final_relative_residual: Option<f64>,
    pub threshold: f64,
    pub pass: bool,
}

impl LimitsRecord {
    pub fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Json => Ok(serde_json::to_string(self).expect("record serializes")),
            Format::Human => {
                let verdict = if self.pass { "PASS" } else { "FAIL" };
                let pts = self
                    .points
                    .iter()
                    .map(|p| format!("{}:{:.3e}", p.parameter, p.residual))
                    .collect::<Vec<_>>()
                    .join(" ");
                Ok(format!(
                    "{verdict} limits {}  residuals: {pts}  monotone={}",
                    self.which, self.monotone_decreasing
                ))
            }
            Format::Csv => Err("csv output is defined for identity reports only".into()),
        }
    }
}

#[derive(Serialize)]
struct ErrorRecord {
    error: String,
    kind: &'static str,
}

pub fn eval_error_kind(e: &EvalError) -> &'static str {
    match e {
        EvalError::Domain(_) => "domain",
        EvalError::Parameter(_) => "parameter",
        EvalError::PoleProximity(_) => "pole_proximity",
        EvalError::TermCapExceeded { .. } => "term_cap_exceeded",
        EvalError::TooManySkips { .. } => "too_many_skips",
    }
}

/// The exit-code table: 2 domain/parameter, 3 pole proximity, 4 term cap.
pub fn eval_error_exit(e: &EvalError) -> i32 {
    match e {
        EvalError::Domain(_) | EvalError::Parameter(_) | EvalError::TooManySkips { .. } => 2,
        EvalError::PoleProximity(_) => 3,
        EvalError::TermCapExceeded { .. } => 4,
    }
}

pub fn print_eval_error(e: &EvalError) -> i32 {
    let record = ErrorRecord {
        error: e.to_string(),
        kind: eval_error_kind(e),
    };
    eprintln!("{}", serde_json::to_string(&record).expect("error serializes"));
    eval_error_exit(e)
}

pub fn print_formal_error(e: &FormalError) -> i32 {
    let record = ErrorRecord {
        error: e.to_string(),
        kind: match e {
            FormalError::Parameter(_) => "parameter",
            FormalError::NotInvertible(_) => "not_invertible",
        },
    };
    eprintln!("{}", serde_json::to_string(&record).expect("error serializes"));
    2
}

pub fn print_usage_error(msg: &str) -> i32 {
    let record = ErrorRecord {
        error: msg.to_string(),
        kind: "parameter",
    };
    eprintln!("{}", serde_json::to_string(&record).expect("error serializes"));
    2
}
