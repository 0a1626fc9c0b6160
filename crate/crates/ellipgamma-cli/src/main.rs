//! Command line interface: evaluation, identity verification, exact formal
//! checks, and degeneration-limit studies with machine-readable output.

mod output;
mod parse;

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use num_rational::BigRational;

use ellipgamma::config::EvalConfig;
use ellipgamma::error::EvalError;
use ellipgamma::formal::{
    verify_lemma1_formal, verify_lemma2_formal, verify_mult1_formal, VerificationResult,
};
use ellipgamma::identities::{
    default_registry, limit_rational_check, limit_trig_check, monotone_converging, verify,
    IdentityName, IdentityReport, IdentitySpec,
};
use ellipgamma::numerics::{
    cis_2pi, elliptic_gamma, elliptic_gamma_order, elliptic_number, euler_gamma, gamma_bar_eval,
    nome, pochhammer_terms, q_gamma, q_number, qpochhammer, theta0, UpperHalfPoint,
};

use output::{
    coefficient_values, complex_repr, mismatch_value, print_eval_error, print_formal_error,
    print_usage_error, render_report_human, EvalInputs, EvalRecord, Format, FormalRecord,
    LimitsRecord, Truncation, VerifyAllRecord,
};
use parse::parse_complex;

fn complex_arg(s: &str) -> Result<Complex64, String> {
    parse_complex(s)
}

#[derive(Parser)]
#[command(
    name = "ellipgamma",
    version,
    about = "Evaluate the elliptic gamma function family and verify its identities"
)]
struct Cli {
    /// Relative truncation target for all product evaluations
    #[arg(long, global = true, default_value_t = 1e-12, env = "ELLIPGAMMA_EPS")]
    eps_rel: f64,
    /// Output format (csv applies to identity reports only)
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function at a point
    Eval {
        /// One of: theta0, egamma, egamma-bar, qgamma, qpoch, eulergamma, ellnum, qnum
        #[arg(long)]
        function: String,
        /// Complex argument, e.g. 0.5, 0.7i, 0.5+0.7i
        #[arg(long, value_parser = complex_arg)]
        z: Option<Complex64>,
        /// Modular parameter tau (upper half-plane)
        #[arg(long, value_parser = complex_arg)]
        tau: Option<Complex64>,
        /// Modular parameter sigma (upper half-plane)
        #[arg(long, value_parser = complex_arg)]
        sigma: Option<Complex64>,
        /// Direct x for qpoch (defaults to e^{2 pi i z})
        #[arg(long, value_parser = complex_arg)]
        x: Option<Complex64>,
        /// Direct q for qpoch (defaults to e^{2 pi i tau})
        #[arg(long, value_parser = complex_arg)]
        q: Option<Complex64>,
    },
    /// Verify one identity (or the whole registry) by seeded residual sampling
    Verify {
        /// Registry key, e.g. mult1, legendre, egamma_shift_sigma
        #[arg(long, conflicts_with = "all")]
        identity: Option<String>,
        /// Run the full registry with n, m over {1,2,3,4}
        #[arg(long)]
        all: bool,
        /// Multiplication order for mult1/mult2/lemma1/lemma2 (default 2)
        #[arg(long)]
        n: Option<u32>,
        /// Second order for lemma1 (default 2)
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Exact factor-multiset / power-series verification
    Formal {
        /// One of: mult1, lemma1, lemma2
        #[arg(long)]
        identity: String,
        /// Multiplication order (default 2)
        #[arg(long)]
        n: Option<u32>,
        /// Second order for lemma1 (default 2)
        #[arg(long)]
        m: Option<u32>,
        /// Exponent cutoff for factor comparisons (mult1, lemma1)
        #[arg(long, default_value_t = 8)]
        cutoff: u32,
        /// Total-degree truncation for series comparison (lemma2)
        #[arg(long, default_value_t = 12)]
        degree: u32,
    },
    /// Degeneration-limit studies
    Limits {
        /// trig (elliptic to q-gamma) or rational (q-gamma to Euler gamma)
        #[arg(long)]
        which: String,
        #[arg(long, value_parser = complex_arg)]
        z: Option<Complex64>,
        /// Required for the trig limit
        #[arg(long, value_parser = complex_arg)]
        tau: Option<Complex64>,
        /// Comma-separated grid (trig: Im sigma ascending, default 2,3,4,5;
        /// rational: t descending, default 0.2,0.1,0.05)
        #[arg(long)]
        grid: Option<String>,
        /// Final-residual pass threshold (trig: absolute, default 1e-8;
        /// rational: relative to |gamma(z)|, default 0.1)
        #[arg(long)]
        threshold: Option<f64>,
    },
}

fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    let cfg = EvalConfig::with_eps_rel(cli.eps_rel);
    if let Err(e) = cfg.validate() {
        return exit_code(print_eval_error(&e));
    }
    let code = match cli.command {
        Command::Eval {
            function,
            z,
            tau,
            sigma,
            x,
            q,
        } => cmd_eval(&function, z, tau, sigma, x, q, &cfg, cli.format),
        Command::Verify {
            identity,
            all,
            n,
            m,
            samples,
            seed,
            tol,
        } => cmd_verify(identity, all, n, m, samples, seed, tol, &cfg, cli.format),
        Command::Formal {
            identity,
            n,
            m,
            cutoff,
            degree,
        } => cmd_formal(&identity, n, m, cutoff, degree, cli.format),
        Command::Limits {
            which,
            z,
            tau,
            grid,
            threshold,
        } => cmd_limits(&which, z, tau, grid, threshold, &cfg, cli.format),
    };
    exit_code(code)
}

fn exit_code(code: i32) -> std::process::ExitCode {
    std::process::ExitCode::from(code as u8)
}

fn need<T>(value: Option<T>, flag: &str, function: &str) -> Result<T, EvalError> {
    value.ok_or_else(|| {
        EvalError::Parameter(format!("--{flag} is required for function '{function}'"))
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_eval(
    function: &str,
    z: Option<Complex64>,
    tau: Option<Complex64>,
    sigma: Option<Complex64>,
    x: Option<Complex64>,
    q: Option<Complex64>,
    cfg: &EvalConfig,
    format: Format,
) -> i32 {
    let inputs = EvalInputs {
        z: z.map(complex_repr),
        tau: tau.map(complex_repr),
        sigma: sigma.map(complex_repr),
        x: x.map(complex_repr),
        q: q.map(complex_repr),
    };

    let outcome = eval_function(function, z, tau, sigma, x, q, cfg);
    match outcome {
        Ok((value, truncation, mut warnings)) => {
            if value.norm() < cfg.pole_guard {
                warnings.push("zero".into());
            }
            let record = EvalRecord {
                function: function.to_string(),
                inputs,
                value: complex_repr(value),
                truncation,
                warnings,
            };
            match record.render(format) {
                Ok(text) => {
                    println!("{text}");
                    0
                }
                Err(msg) => print_usage_error(&msg),
            }
        }
        Err(e) => print_eval_error(&e),
    }
}

type EvalOutcome = Result<(Complex64, Option<Truncation>, Vec<String>), EvalError>;

fn eval_function(
    function: &str,
    z: Option<Complex64>,
    tau: Option<Complex64>,
    sigma: Option<Complex64>,
    x: Option<Complex64>,
    q: Option<Complex64>,
    cfg: &EvalConfig,
) -> EvalOutcome {
    let point = |t: Complex64| UpperHalfPoint::new(t, cfg);
    match function {
        "theta0" => {
            let z = need(z, "z", function)?;
            let tau = point(need(tau, "tau", function)?)?;
            let value = theta0(z, &tau, cfg)?;
            let xv = cis_2pi(z);
            let qv = tau.nome();
            let j = pochhammer_terms(xv.norm(), qv.norm(), cfg)?
                .max(pochhammer_terms((qv / xv).norm(), qv.norm(), cfg)?);
            Ok((value, Some(Truncation { j, k: None }), vec![]))
        }
        "egamma" => {
            let z = need(z, "z", function)?;
            let tau = point(need(tau, "tau", function)?)?;
            let sigma = point(need(sigma, "sigma", function)?)?;
            let value = elliptic_gamma(z, &tau, &sigma, cfg)?;
            let (j, k) = elliptic_gamma_order(z, &tau, &sigma, cfg)?;
            Ok((value, Some(Truncation { j, k: Some(k) }), vec![]))
        }
        "egamma-bar" => {
            let z = need(z, "z", function)?;
            let tau = point(need(tau, "tau", function)?)?;
            let sigma = point(need(sigma, "sigma", function)?)?;
            let eval = gamma_bar_eval(z, &tau, &sigma, cfg)?;
            let (j, k) = elliptic_gamma_order(z * tau.tau(), &tau, &sigma, cfg)?;
            let warnings = if eval.branch_warning {
                vec!["branch".into()]
            } else {
                vec![]
            };
            Ok((eval.value, Some(Truncation { j, k: Some(k) }), warnings))
        }
        "qgamma" => {
            let z = need(z, "z", function)?;
            let tau = point(need(tau, "tau", function)?)?;
            let value = q_gamma(z, &tau, cfg)?;
            let qv = tau.nome();
            let qz = (z * qv.ln()).exp();
            let j = pochhammer_terms(qv.norm(), qv.norm(), cfg)?
                .max(pochhammer_terms(qz.norm(), qv.norm(), cfg)?);
            Ok((value, Some(Truncation { j, k: None }), vec![]))
        }
        "qpoch" => {
            let xv = match x {
                Some(v) => v,
                None => cis_2pi(need(z, "x (or --z)", function)?),
            };
            let qv = match q {
                Some(v) => v,
                None => nome(need(tau, "q (or --tau)", function)?, cfg)?,
            };
            if qv.norm() >= 1.0 {
                return Err(EvalError::Domain(format!("|q| = {} must be < 1", qv.norm())));
            }
            let value = qpochhammer(xv, qv, cfg)?;
            let j = pochhammer_terms(xv.norm(), qv.norm(), cfg)?;
            Ok((value, Some(Truncation { j, k: None }), vec![]))
        }
        "eulergamma" => {
            let z = need(z, "z", function)?;
            Ok((euler_gamma(z)?, None, vec![]))
        }
        "ellnum" => {
            let z = need(z, "z", function)?;
            let tau = point(need(tau, "tau", function)?)?;
            let sigma = point(need(sigma, "sigma", function)?)?;
            let value = elliptic_number(z, &tau, &sigma, cfg)?;
            let rv = sigma.nome();
            let j = [cis_2pi(z * tau.tau()), cis_2pi(tau.tau())]
                .into_iter()
                .map(|xv| -> Result<usize, EvalError> {
                    Ok(pochhammer_terms(xv.norm(), rv.norm(), cfg)?
                        .max(pochhammer_terms((rv / xv).norm(), rv.norm(), cfg)?))
                })
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .max()
                .unwrap();
            Ok((value, Some(Truncation { j, k: None }), vec![]))
        }
        "qnum" => {
            let z = need(z, "z", function)?;
            let tau = point(need(tau, "tau", function)?)?;
            Ok((q_number(z, &tau), None, vec![]))
        }
        other => Err(EvalError::Parameter(format!(
            "unknown function '{other}' (expected theta0, egamma, egamma-bar, qgamma, qpoch, eulergamma, ellnum, qnum)"
        ))),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    identity: Option<String>,
    all: bool,
    n: Option<u32>,
    m: Option<u32>,
    samples: usize,
    seed: u64,
    tol: f64,
    cfg: &EvalConfig,
    format: Format,
) -> i32 {
    if all {
        if identity.is_some() || n.is_some() || m.is_some() {
            return print_usage_error("--all conflicts with --identity/--n/--m");
        }
        return cmd_verify_all(samples, seed, tol, cfg, format);
    }
    let Some(identity) = identity else {
        return print_usage_error("one of --identity or --all is required");
    };
    let name: IdentityName = match identity.parse() {
        Ok(name) => name,
        Err(e) => return print_eval_error(&e),
    };
    let spec = match IdentitySpec::new(name, n, m) {
        Ok(spec) => spec,
        Err(e) => return print_eval_error(&e),
    };
    match verify(&spec, samples, seed, tol, cfg) {
        Ok(report) => {
            print_report(&report, format);
            if report.pass {
                0
            } else {
                1
            }
        }
        Err(e) => print_eval_error(&e),
    }
}

fn print_report(report: &IdentityReport, format: Format) {
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Csv => {
            println!("{}", IdentityReport::CSV_HEADER);
            println!("{}", report.to_csv_row());
        }
        Format::Human => println!("{}", render_report_human(report)),
    }
}

fn cmd_verify_all(samples: usize, seed: u64, tol: f64, cfg: &EvalConfig, format: Format) -> i32 {
    let registry = default_registry();
    let mut reports = Vec::with_capacity(registry.len());
    for spec in &registry {
        match verify(spec, samples, seed, tol, cfg) {
            Ok(report) => reports.push(report),
            Err(e) => return print_eval_error(&e),
        }
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    let record = VerifyAllRecord {
        samples,
        seed,
        tol,
        eps_rel: cfg.eps_rel,
        reports,
        failed,
        pass: failed == 0,
    };
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string(&record).expect("record serializes")
        ),
        Format::Csv => {
            println!("{}", IdentityReport::CSV_HEADER);
            for r in &record.reports {
                println!("{}", r.to_csv_row());
            }
        }
        Format::Human => {
            for r in &record.reports {
                println!("{}", render_report_human(r));
            }
            println!(
                "{} of {} identities passed",
                record.reports.len() - failed,
                record.reports.len()
            );
        }
    }
    if record.pass {
        0
    } else {
        1
    }
}

fn cmd_formal(
    identity: &str,
    n: Option<u32>,
    m: Option<u32>,
    cutoff: u32,
    degree: u32,
    format: Format,
) -> i32 {
    let n_val = n.unwrap_or(2);
    // (result, m used, cutoff used, degree used) or an already-printed exit code
    type Checked = (VerificationResult, Option<u32>, Option<u32>, Option<u32>);
    let result: Result<Checked, i32> = match identity {
            "mult1" => {
                if m.is_some() {
                    return print_usage_error("mult1 takes no --m");
                }
                match verify_mult1_formal(n_val, BigRational::from_integer(cutoff.into())) {
                    Ok(r) => Ok((r, None, Some(cutoff), None)),
                    Err(e) => Err(print_formal_error(&e)),
                }
            }
            "lemma1" => {
                let m_val = m.unwrap_or(2);
                match verify_lemma1_formal(m_val, n_val, BigRational::from_integer(cutoff.into()))
                {
                    Ok(r) => Ok((r, Some(m_val), Some(cutoff), None)),
                    Err(e) => Err(print_formal_error(&e)),
                }
            }
            "lemma2" => {
                if m.is_some() {
                    return print_usage_error("lemma2 takes no --m");
                }
                match verify_lemma2_formal(n_val, degree) {
                    Ok(r) => Ok((r, None, None, Some(degree))),
                    Err(e) => Err(print_formal_error(&e)),
                }
            }
            other => {
                return print_usage_error(&format!(
                    "unknown formal identity '{other}' (expected mult1, lemma1, lemma2)"
                ))
            }
        };
    let (result, m_used, cutoff_used, degree_used) = match result {
        Ok(v) => v,
        Err(code) => return code,
    };
    let record = FormalRecord {
        identity: identity.to_string(),
        m: m_used,
        n: n_val,
        cutoff: cutoff_used,
        degree: degree_used,
        pass: result.pass,
        first_mismatch: result.mismatch.as_ref().map(mismatch_value),
        coefficients: result.q_coefficients.as_deref().map(coefficient_values),
    };
    match record.render(format) {
        Ok(text) => {
            println!("{text}");
            if record.pass {
                0
            } else {
                1
            }
        }
        Err(msg) => print_usage_error(&msg),
    }
}

/// Residuals at or below this level count as converged for the monotone
/// verdict; ordering within floating noise is meaningless.
const MONOTONE_NOISE_FLOOR: f64 = 1e-12;

fn parse_grid(text: &str) -> Result<Vec<f64>, EvalError> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .map_err(|_| EvalError::Parameter(format!("bad grid entry '{part}'")))
        })
        .collect()
}

fn cmd_limits(
    which: &str,
    z: Option<Complex64>,
    tau: Option<Complex64>,
    grid: Option<String>,
    threshold: Option<f64>,
    cfg: &EvalConfig,
    format: Format,
) -> i32 {
    let Some(z) = z else {
        return print_usage_error("--z is required");
    };
    let outcome = match which {
        "trig" => {
            let Some(tau) = tau else {
                return print_usage_error("--tau is required for the trig limit");
            };
            let grid = match grid.as_deref().map(parse_grid).transpose() {
                Ok(g) => g.unwrap_or_else(|| vec![2.0, 3.0, 4.0, 5.0]),
                Err(e) => return print_eval_error(&e),
            };
            let threshold = threshold.unwrap_or(1e-8);
            let tau = match UpperHalfPoint::new(tau, cfg) {
                Ok(t) => t,
                Err(e) => return print_eval_error(&e),
            };
            match limit_trig_check(z, &tau, &grid, cfg) {
                Ok(points) => {
                    let monotone = monotone_converging(&points, MONOTONE_NOISE_FLOOR);
                    let final_residual = points.last().unwrap().residual;
                    let pass = monotone && final_residual <= threshold;
                    Ok(LimitsRecord {
                        which: which.into(),
                        z: complex_repr(z),
                        tau: Some(complex_repr(tau.tau())),
                        points,
                        monotone_decreasing: monotone,
                        final_residual,
                        final_relative_residual: None,
                        threshold,
                        pass,
                    })
                }
                Err(e) => Err(e),
            }
        }
        "rational" => {
            let grid = match grid.as_deref().map(parse_grid).transpose() {
                Ok(g) => g.unwrap_or_else(|| vec![0.2, 0.1, 0.05]),
                Err(e) => return print_eval_error(&e),
            };
            let threshold = threshold.unwrap_or(0.1);
            match limit_rational_check(z, &grid, cfg).and_then(|points| {
                let reference = euler_gamma(z)?;
                Ok((points, reference))
            }) {
                Ok((points, reference)) => {
                    let monotone = monotone_converging(&points, MONOTONE_NOISE_FLOOR);
                    let final_residual = points.last().unwrap().residual;
                    let final_rel = final_residual / reference.norm();
                    let pass = monotone && final_rel <= threshold;
                    Ok(LimitsRecord {
                        which: which.into(),
                        z: complex_repr(z),
                        tau: None,
                        points,
                        monotone_decreasing: monotone,
                        final_residual,
                        final_relative_residual: Some(final_rel),
                        threshold,
                        pass,
                    })
                }
                Err(e) => Err(e),
            }
        }
        other => {
            return print_usage_error(&format!(
                "unknown limit '{other}' (expected trig or rational)"
            ))
        }
    };
    match outcome {
        Ok(record) => match record.render(format) {
            Ok(text) => {
                println!("{text}");
                if record.pass {
                    0
                } else {
                    1
                }
            }
            Err(msg) => print_usage_error(&msg),
        },
        Err(e) => print_eval_error(&e),
    }
}
