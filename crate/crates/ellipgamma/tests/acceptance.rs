//! Acceptance suite: one test per criterion, in order. Each test prints a
//! single PASS line on success (run with `--nocapture` to see them); a failed
//! assertion is the FAIL line.
//!
//! Criterion 10 (byte-identical CLI output across runs and thread counts) is
//! split: the library half lives here, the process-level half in the CLI
//! crate's acceptance test.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use ellipgamma::config::EvalConfig;
use ellipgamma::formal::{
    collapse_unity_roots, verify_lemma1_formal, verify_lemma2_formal, verify_mult1_formal, Factor,
    FactorMultiset, Side,
};
use ellipgamma::identities::{
    limit_rational_check, limit_trig_check, mult2_log_derivative, sample_points,
    strictly_decreasing, verify, verify_sequential, IdentityName, IdentitySpec, SampleDomain,
    SamplePoint,
};
use ellipgamma::numerics::{
    elliptic_gamma, elliptic_gamma_at_order, elliptic_gamma_order, euler_gamma, UpperHalfPoint,
};

const TOL: f64 = 1e-9;
const SEED: u64 = 42;

fn cfg() -> EvalConfig {
    EvalConfig::default()
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn spec(name: IdentityName, n: Option<u32>, m: Option<u32>) -> IdentitySpec {
    IdentitySpec::new(name, n, m).expect("valid spec")
}

fn assert_identity(name: IdentityName, n: Option<u32>, m: Option<u32>, samples: usize) -> f64 {
    let spec = spec(name, n, m);
    let report = verify(&spec, samples, SEED, TOL, &cfg()).expect("verification runs");
    assert!(
        report.pass,
        "{} n={:?} m={:?}: max residual {:.3e} > {TOL:.0e} at {:?}",
        name, n, m, report.max_rel_residual, report.worst_point
    );
    report.max_rel_residual
}

#[test]
fn criterion_01_characterizing_properties() {
    let shift = assert_identity(IdentityName::EgammaShiftSigma, None, None, 200);
    let period = assert_identity(IdentityName::EgammaPeriod, None, None, 200);

    // |Gamma((tau+sigma)/2) - 1| <= 1e-9, as an absolute deviation
    let cfg = cfg();
    let mut worst_norm = 0.0f64;
    for p in sample_points(&SampleDomain::standard(), 200, SEED) {
        let tau = UpperHalfPoint::new(p.tau, &cfg).unwrap();
        let sigma = UpperHalfPoint::new(p.sigma, &cfg).unwrap();
        let half = (tau.tau() + sigma.tau()) / 2.0;
        let v = elliptic_gamma(half, &tau, &sigma, &cfg).unwrap();
        worst_norm = worst_norm.max((v - c(1.0, 0.0)).norm());
    }
    assert!(worst_norm <= TOL, "normalization deviates by {worst_norm:.3e}");
    println!(
        "criterion 01 PASS: characterizing properties over 200 samples \
         (shift {shift:.2e}, period {period:.2e}, normalization {worst_norm:.2e})"
    );
}

#[test]
fn criterion_02_first_multiplication() {
    let mut worst = 0.0f64;
    for n in 1..=4 {
        worst = worst.max(assert_identity(IdentityName::Mult1, Some(n), None, 100));
        let formal = verify_mult1_formal(n, BigRational::from_integer(8.into())).unwrap();
        assert!(formal.pass, "formal mult1 n={n}: {:?}", formal.mismatch);
    }
    println!(
        "criterion 02 PASS: first multiplication formula, numeric n=1..4 \
         (worst {worst:.2e}) and exact factor multisets at cutoff 8"
    );
}

#[test]
fn criterion_03_second_multiplication() {
    let mut worst = 0.0f64;
    for n in [2, 3] {
        worst = worst.max(assert_identity(IdentityName::Mult2, Some(n), None, 100));
    }
    // branch-free supplement: log-derivative of the LHS/RHS ratio at 20 points
    let cfg = cfg();
    let mut worst_deriv = 0.0f64;
    for n in [2, 3] {
        let spec = spec(IdentityName::Mult2, Some(n), None);
        for p in sample_points(&SampleDomain::standard(), 20, SEED + 1) {
            let d = mult2_log_derivative(&spec, &p, 1e-4, &cfg).unwrap();
            worst_deriv = worst_deriv.max(d);
        }
    }
    assert!(worst_deriv <= 1e-5, "log derivative {worst_deriv:.3e} > 1e-5");
    println!(
        "criterion 03 PASS: second multiplication formula, numeric n=2,3 \
         (worst {worst:.2e}), log-derivative supplement {worst_deriv:.2e} at 20 points"
    );
}

#[test]
fn criterion_04_lemma1() {
    for m in 1..=3 {
        for n in 1..=3 {
            let formal = verify_lemma1_formal(m, n, BigRational::from_integer(8.into())).unwrap();
            assert!(formal.pass, "formal lemma1 ({m},{n}): {:?}", formal.mismatch);
        }
    }
    let mut worst = 0.0f64;
    for (m, n) in [(2, 2), (2, 3), (3, 2)] {
        worst = worst.max(assert_identity(IdentityName::Lemma1, Some(n), Some(m), 50));
    }
    println!(
        "criterion 04 PASS: lemma 1 exact on (m,n) in {{1,2,3}}^2 at cutoff 8, \
         numeric at 50 samples (worst {worst:.2e})"
    );
}

#[test]
fn criterion_05_lemma2() {
    for n in [2, 3, 4, 5] {
        let formal = verify_lemma2_formal(n, 12).unwrap();
        assert!(formal.pass, "formal lemma2 n={n}: {:?}", formal.mismatch);
    }
    let small = verify_lemma2_formal(2, 3).unwrap();
    assert!(small.pass);
    let coeffs: Vec<i64> = small
        .q_coefficients
        .unwrap()
        .iter()
        .map(|v| i64::try_from(v).unwrap())
        .collect();
    assert_eq!(coeffs, vec![1, 1, 1, 2], "hand-expanded coefficients");
    println!(
        "criterion 05 PASS: lemma 2 exact (incl. r-freeness) for n=2..5 at degree 12; \
         n=2 degree 3 coefficients [1,1,1,2]"
    );
}

#[test]
fn criterion_06_classical_suite() {
    let mut worst = 0.0f64;
    for name in [
        IdentityName::SineDup,
        IdentityName::Legendre,
        IdentityName::Askey,
        IdentityName::ThetaDup,
    ] {
        worst = worst.max(assert_identity(name, None, None, 100));
    }
    // reference gamma validation backing the Legendre check
    let one = euler_gamma(c(1.0, 0.0)).unwrap();
    assert!((one - c(1.0, 0.0)).norm() <= 1e-12);
    let five = euler_gamma(c(5.0, 0.0)).unwrap();
    assert!((five - c(24.0, 0.0)).norm() <= 24.0 * 1e-12);
    let half = euler_gamma(c(0.5, 0.0)).unwrap();
    let sqrt_pi = std::f64::consts::PI.sqrt();
    assert!((half - c(sqrt_pi, 0.0)).norm() <= sqrt_pi * 1e-12);
    println!(
        "criterion 06 PASS: sine/Legendre/Askey/theta duplication at 100 samples \
         (worst {worst:.2e}); reference gamma validated at 1, 5, 1/2"
    );
}

#[test]
fn criterion_07_degenerations() {
    let cfg = cfg();
    let tau = UpperHalfPoint::from_im(0.6, &cfg).unwrap();
    let trig = limit_trig_check(c(0.3, 0.0), &tau, &[2.0, 3.0, 4.0, 5.0], &cfg).unwrap();
    assert!(strictly_decreasing(&trig), "trig residuals {trig:?}");
    let final_trig = trig.last().unwrap().residual;
    assert!(final_trig < 1e-8, "final trig residual {final_trig:.3e}");

    let rational = limit_rational_check(c(0.5, 0.0), &[0.2, 0.1, 0.05], &cfg).unwrap();
    assert!(strictly_decreasing(&rational), "rational residuals {rational:?}");
    println!(
        "criterion 07 PASS: trig limit strictly decreasing to {final_trig:.2e} < 1e-8; \
         rational limit strictly decreasing over t = 0.2, 0.1, 0.05"
    );
}

#[test]
fn criterion_08_truncation_honesty() {
    let cfg = cfg();
    let mut worst = 0.0f64;
    for p in sample_points(&SampleDomain::standard(), 50, SEED + 2) {
        let tau = UpperHalfPoint::new(p.tau, &cfg).unwrap();
        let sigma = UpperHalfPoint::new(p.sigma, &cfg).unwrap();
        let (j, k) = elliptic_gamma_order(p.z, &tau, &sigma, &cfg).unwrap();
        let v1 = elliptic_gamma_at_order(p.z, &tau, &sigma, (j, k), &cfg).unwrap();
        let v2 = elliptic_gamma_at_order(p.z, &tau, &sigma, (2 * j, 2 * k), &cfg).unwrap();
        worst = worst.max((v1 - v2).norm() / v1.norm());
    }
    assert!(worst <= 2e-12, "doubling (J,K) moved a value by {worst:.3e}");
    println!("criterion 08 PASS: doubling (J,K) moves values by at most {worst:.2e} over 50 points");
}

/// Seeded random multiset with injected complete root-of-unity families.
/// Every factor is kept numerically safe (|1-u| bounded away from 0) at the
/// fixed evaluation parameters below.
fn random_multiset(rng: &mut ChaCha8Rng, q: Complex64, r: Complex64, x: Complex64) -> FactorMultiset {
    let order = 1 + (rng.next_u64() % 4) as u32;
    let cutoff = BigRational::from_integer(4.into());
    let mut ms = FactorMultiset::new(order, cutoff).unwrap();
    let push = |ms: &mut FactorMultiset, factor: Factor, count: u64| {
        let u = ms_factor_value(&factor, order, q, r, x);
        if (Complex64::new(1.0, 0.0) - u).norm() > 0.05 {
            ms.insert(factor, count).unwrap();
        }
    };
    let rat = |num: u64, den: u32| BigRational::new(BigInt::from(num), BigInt::from(den));
    let n_loose = 2 + (rng.next_u64() % 6) as usize;
    for _ in 0..n_loose {
        let factor = Factor::new(
            rat(rng.next_u64() % (2 * order as u64 + 1), order),
            rat(rng.next_u64() % (2 * order as u64 + 1), order),
            (rng.next_u64() % 3) as i64 - 1,
            (rng.next_u64() % order as u64) as u32,
            if rng.next_u64().is_multiple_of(2) { Side::Numerator } else { Side::Denominator },
        );
        push(&mut ms, factor, 1 + rng.next_u64() % 2);
    }
    // complete families so the collapse has work to do
    let n_families = 1 + (rng.next_u64() % 2) as usize;
    for _ in 0..n_families {
        let alpha = rat(rng.next_u64() % (order as u64 + 1), order);
        let beta = rat(rng.next_u64() % (order as u64 + 1), order);
        let xpow = (rng.next_u64() % 3) as i64 - 1;
        let side = if rng.next_u64().is_multiple_of(2) { Side::Numerator } else { Side::Denominator };
        let count = 1 + rng.next_u64() % 2;
        let safe = (0..order).all(|k| {
            let f = Factor::new(alpha.clone(), beta.clone(), xpow, k, side);
            (Complex64::new(1.0, 0.0) - ms_factor_value(&f, order, q, r, x)).norm() > 0.05
        });
        if safe {
            for k in 0..order {
                ms.insert(Factor::new(alpha.clone(), beta.clone(), xpow, k, side), count)
                    .unwrap();
            }
        }
    }
    ms
}

fn ms_factor_value(f: &Factor, order: u32, q: Complex64, r: Complex64, x: Complex64) -> Complex64 {
    use num_traits::ToPrimitive;
    let angle = std::f64::consts::TAU * f.rootpow as f64 / order as f64;
    (q.ln() * f.alpha.to_f64().unwrap()
        + r.ln() * f.beta.to_f64().unwrap()
        + x.ln() * f.xpow as f64
        + Complex64::new(0.0, angle))
    .exp()
}

#[test]
fn criterion_09_numeric_formal_bridge() {
    let q = c(0.23, 0.11);
    let r = c(0.17, -0.08);
    let x = c(0.62, 0.2);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let ms = random_multiset(&mut rng, q, r, x);
        let before = ms.eval(q, r, x);
        let after = collapse_unity_roots(&ms).eval(q, r, x);
        let rel = (before - after).norm() / (before.norm() + after.norm() + 1e-300);
        worst = worst.max(rel);
    }
    assert!(worst <= 1e-12, "collapse moved an evaluation by {worst:.3e}");
    println!("criterion 09 PASS: collapse preserves evaluation to {worst:.2e} over 50 random multisets");
}

#[test]
fn criterion_10_determinism_library() {
    let cfg = cfg();
    let specs = [
        spec(IdentityName::Mult1, Some(3), None),
        spec(IdentityName::GammabarShift, None, None),
        spec(IdentityName::Lemma2, Some(3), None),
    ];
    for s in &specs {
        let a = verify(s, 100, SEED, TOL, &cfg).unwrap();
        let b = verify(s, 100, SEED, TOL, &cfg).unwrap();
        assert_eq!(a.to_json(), b.to_json(), "repeat run differs for {}", s.name);
        let seq = verify_sequential(s, 100, SEED, TOL, &cfg).unwrap();
        assert_eq!(
            a.to_json(),
            seq.to_json(),
            "parallel vs sequential differs for {}",
            s.name
        );
    }
    println!(
        "criterion 10 PASS (library half): reports byte-identical across repeat runs \
         and parallel vs sequential execution"
    );
}

/// Not a numbered criterion: keep the sampled points themselves stable so the
/// frozen residuals above remain meaningful across refactors.
#[test]
fn sample_stream_is_frozen() {
    let pts = sample_points(&SampleDomain::standard(), 2, 42);
    let expect = |v: f64, w: f64| assert!((v - w).abs() < 1e-15, "{v} vs {w}");
    let SamplePoint { z, tau, sigma } = pts[0];
    expect(z.re, 0.663706573076004225);
    expect(z.im, 0.237568851918120993);
    expect(tau.im, 0.870268043142171654);
    expect(sigma.im, 1.09009657331707444);
}
