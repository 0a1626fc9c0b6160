//! Exact verification of the multiplication theorem and its two lemmas by
//! factor-multiset rearrangement and truncated series expansion.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::FormalError;
use crate::formal::enumerate::factors_of_gamma;
use crate::formal::factor::{collapse_unity_roots, multiset_diff, Factor, FactorMultiset};
use crate::formal::series::{series_mul, series_recip, TruncatedBiseries};

/// Why a verification failed; carries the first witness found.
#[derive(Debug, Clone, PartialEq)]
pub enum Mismatch {
    /// Factors present on one side only (capped lists).
    FactorDiff {
        only_lhs: Vec<Factor>,
        only_rhs: Vec<Factor>,
    },
    /// A root-of-unity family survived the collapse incompletely; the proof
    /// chain predicts complete families, so this flags an inconsistency.
    IncompleteFamily { factor: Factor },
    /// Series coefficients differ at (q^i, r^j).
    Coefficient {
        q_deg: u32,
        r_deg: u32,
        lhs: BigInt,
        rhs: BigInt,
    },
    /// The left side failed to be r-free at (q^i, r^j).
    RDependence {
        q_deg: u32,
        r_deg: u32,
        coeff: BigInt,
    },
}

/// Outcome of an exact check.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationResult {
    pub pass: bool,
    pub mismatch: Option<Mismatch>,
    /// For the series-based check: the shared q-coefficients [c_0 … c_D]
    /// when the identity holds.
    pub q_coefficients: Option<Vec<BigInt>>,
}

impl VerificationResult {
    fn pass() -> Self {
        VerificationResult {
            pass: true,
            mismatch: None,
            q_coefficients: None,
        }
    }

    fn fail(mismatch: Mismatch) -> Self {
        VerificationResult {
            pass: false,
            mismatch: Some(mismatch),
            q_coefficients: None,
        }
    }
}

const DIFF_WITNESS_CAP: usize = 8;

fn zero() -> BigRational {
    BigRational::zero()
}

fn rat(n: u32, d: u32) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn factor_diff_result(
    a: &FactorMultiset,
    b: &FactorMultiset,
) -> Result<VerificationResult, FormalError> {
    let (only_a, only_b) = multiset_diff(a, b)?;
    if only_a.is_empty() && only_b.is_empty() {
        Ok(VerificationResult::pass())
    } else {
        Ok(VerificationResult::fail(Mismatch::FactorDiff {
            only_lhs: only_a.iter().map(|(f, _)| f).take(DIFF_WITNESS_CAP).collect(),
            only_rhs: only_b.iter().map(|(f, _)| f).take(DIFF_WITNESS_CAP).collect(),
        }))
    }
}

/// Exact check of Γ(nz,τ,σ) = ∏_{k₁,k₂,k₃=0}^{n−1} Γ(z + (k₁+k₂τ+k₃σ)/n, τ, σ).
///
/// The right side is enumerated with w = e^{2πi/n}, root-of-unity families
/// are collapsed, exponents land back in ℤ with x-power ±n (the left side's
/// internal variable is x^n), and the factor multisets are compared up to
/// the cutoff.
pub fn verify_mult1_formal(
    n: u32,
    cutoff: BigRational,
) -> Result<VerificationResult, FormalError> {
    if n == 0 {
        return Err(FormalError::Parameter("n must be at least 1".into()));
    }
    if cutoff < BigRational::from_integer(2.into()) {
        return Err(FormalError::Parameter(format!(
            "cutoff must be at least 2, got {cutoff}"
        )));
    }
    let mut rhs = FactorMultiset::new(n, cutoff.clone())?;
    for k1 in 0..n {
        for k2 in 0..n {
            for k3 in 0..n {
                let part = factors_of_gamma(
                    (rat(k1, n), rat(k2, n), rat(k3, n)),
                    1,
                    1,
                    n,
                    cutoff.clone(),
                )?;
                rhs.merge(&part)?;
            }
        }
    }
    let collapsed = collapse_unity_roots(&rhs);
    if let Some((factor, _)) = collapsed.iter().find(|(f, _)| f.rootpow != 0) {
        return Ok(VerificationResult::fail(Mismatch::IncompleteFamily {
            factor,
        }));
    }
    let rhs_in_xn = collapsed.rescale_x(n as i64)?.restrict_to_cutoff(cutoff.clone());
    let lhs = factors_of_gamma((zero(), zero(), zero()), 1, 1, 1, cutoff)?;
    factor_diff_result(&lhs, &rhs_in_xn)
}

/// Exact check of Γ(z,τ,σ) = ∏_{a<m} ∏_{b<n} Γ(z + aτ + bσ, mτ, nσ): a pure
/// index rearrangement, no root-of-unity collapse involved.
pub fn verify_lemma1_formal(
    m: u32,
    n: u32,
    cutoff: BigRational,
) -> Result<VerificationResult, FormalError> {
    if m == 0 || n == 0 {
        return Err(FormalError::Parameter("m and n must be at least 1".into()));
    }
    if cutoff <= BigRational::zero() {
        return Err(FormalError::Parameter("cutoff must be positive".into()));
    }
    let lhs = factors_of_gamma((zero(), zero(), zero()), 1, 1, 1, cutoff.clone())?;
    let mut rhs = FactorMultiset::new(1, cutoff.clone())?;
    for a in 0..m {
        for b in 0..n {
            let part = factors_of_gamma(
                (zero(), BigRational::from_integer(a.into()), BigRational::from_integer(b.into())),
                m,
                n,
                1,
                cutoff.clone(),
            )?;
            rhs.merge(&part)?;
        }
    }
    factor_diff_result(&lhs, &rhs)
}

/// Exact check of Γ(τ,nτ,σ)⋯Γ((n−1)τ,nτ,σ) = 1/((q,q^n)(q²,q^n)⋯(q^{n−1},q^n))
/// as truncated series in ℤ[[q,r]] up to total degree D.
///
/// Specializing x to q^k turns the factors of Γ(kτ, nτ, σ) into
/// (1 − q^{(j+1)n−k} r^{l+1}) over (1 − q^{jn+k} r^l). The left side must
/// come out r-free, which is asserted as part of the check.
pub fn verify_lemma2_formal(n: u32, degree: u32) -> Result<VerificationResult, FormalError> {
    if n == 0 {
        return Err(FormalError::Parameter("n must be at least 1".into()));
    }
    let mut lhs = TruncatedBiseries::one(degree);
    for k in 1..n {
        let mut num = TruncatedBiseries::one(degree);
        let mut den = TruncatedBiseries::one(degree);
        let mut j = 0;
        while (j + 1) * n - k <= degree {
            let q_deg = (j + 1) * n - k;
            let mut l = 0;
            while q_deg + l < degree {
                num = series_mul(
                    &num,
                    &TruncatedBiseries::one_minus_monomial(degree, q_deg, l + 1),
                )?;
                l += 1;
            }
            j += 1;
        }
        let mut j = 0;
        while j * n + k <= degree {
            let q_deg = j * n + k;
            let mut l = 0;
            while q_deg + l <= degree {
                den = series_mul(
                    &den,
                    &TruncatedBiseries::one_minus_monomial(degree, q_deg, l),
                )?;
                l += 1;
            }
            j += 1;
        }
        lhs = series_mul(&lhs, &series_mul(&num, &series_recip(&den)?)?)?;
    }

    let mut rhs_den = TruncatedBiseries::one(degree);
    for k in 1..n {
        let mut j = 0;
        while k + j * n <= degree {
            rhs_den = series_mul(
                &rhs_den,
                &TruncatedBiseries::one_minus_monomial(degree, k + j * n, 0),
            )?;
            j += 1;
        }
    }
    let rhs = series_recip(&rhs_den)?;

    if let Some(&(i, j)) = lhs.terms().map(|(k, _)| k).find(|&&(_, j)| j != 0) {
        return Ok(VerificationResult::fail(Mismatch::RDependence {
            q_deg: i,
            r_deg: j,
            coeff: lhs.coeff(i, j),
        }));
    }
    if let Some((i, j)) = lhs.first_difference(&rhs) {
        return Ok(VerificationResult::fail(Mismatch::Coefficient {
            q_deg: i,
            r_deg: j,
            lhs: lhs.coeff(i, j),
            rhs: rhs.coeff(i, j),
        }));
    }
    let mut result = VerificationResult::pass();
    result.q_coefficients = Some(rhs.q_coefficients());
    Ok(result)
}
