//! Bivariate power series in (q, r) over the integers, truncated at a fixed
//! total degree. Coefficients up to the truncation degree are exact.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::FormalError;

/// An element of ℤ[[q,r]] known exactly up to total degree D. Absent keys
/// are zero; stored coefficients are never zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedBiseries {
    degree: u32,
    coeffs: BTreeMap<(u32, u32), BigInt>,
}

impl TruncatedBiseries {
    /// The unit series 1.
    pub fn one(degree: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert((0, 0), BigInt::one());
        TruncatedBiseries { degree, coeffs }
    }

    /// 1 − q^a r^b. Degenerates to 1 when a + b exceeds the truncation degree.
    pub fn one_minus_monomial(degree: u32, q_deg: u32, r_deg: u32) -> Self {
        let mut s = Self::one(degree);
        if q_deg + r_deg <= degree {
            if q_deg == 0 && r_deg == 0 {
                s.coeffs.remove(&(0, 0));
            } else {
                s.coeffs.insert((q_deg, r_deg), -BigInt::one());
            }
        }
        s
    }

    /// Build from explicit (q-degree, r-degree, coefficient) terms.
    pub fn from_terms(degree: u32, terms: &[(u32, u32, i64)]) -> Result<Self, FormalError> {
        let mut coeffs: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        for &(i, j, c) in terms {
            if i + j > degree {
                return Err(FormalError::Parameter(format!(
                    "term q^{i} r^{j} exceeds degree {degree}"
                )));
            }
            let entry = coeffs.entry((i, j)).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                coeffs.remove(&(i, j));
            }
        }
        Ok(TruncatedBiseries { degree, coeffs })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeff(&self, q_deg: u32, r_deg: u32) -> BigInt {
        self.coeffs.get(&(q_deg, r_deg)).cloned().unwrap_or_default()
    }

    /// Iterate the nonzero coefficients in lexicographic key order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.coeffs.iter()
    }

    /// True when no nonzero coefficient involves r.
    pub fn is_r_free(&self) -> bool {
        self.coeffs.keys().all(|&(_, j)| j == 0)
    }

    /// The pure-q coefficients [c_0, …, c_D] of q^i r^0.
    pub fn q_coefficients(&self) -> Vec<BigInt> {
        (0..=self.degree).map(|i| self.coeff(i, 0)).collect()
    }

    /// First key where the two series differ, scanning in key order.
    pub fn first_difference(&self, other: &TruncatedBiseries) -> Option<(u32, u32)> {
        let keys: std::collections::BTreeSet<&(u32, u32)> =
            self.coeffs.keys().chain(other.coeffs.keys()).collect();
        keys.into_iter()
            .find(|&&(i, j)| self.coeff(i, j) != other.coeff(i, j))
            .copied()
    }
}

/// Exact product truncated to the common total degree.
pub fn series_mul(
    a: &TruncatedBiseries,
    b: &TruncatedBiseries,
) -> Result<TruncatedBiseries, FormalError> {
    if a.degree != b.degree {
        return Err(FormalError::Parameter(format!(
            "degree mismatch: {} vs {}",
            a.degree, b.degree
        )));
    }
    let degree = a.degree;
    let mut coeffs: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
    for (&(i1, j1), c1) in &a.coeffs {
        for (&(i2, j2), c2) in &b.coeffs {
            let (i, j) = (i1 + i2, j1 + j2);
            if i + j > degree {
                continue;
            }
            let entry = coeffs.entry((i, j)).or_insert_with(BigInt::zero);
            *entry += c1 * c2;
        }
    }
    coeffs.retain(|_, c| !c.is_zero());
    Ok(TruncatedBiseries { degree, coeffs })
}

/// Exact reciprocal modulo total degree > D. Requires constant coefficient
/// ±1 so the result stays over ℤ.
pub fn series_recip(a: &TruncatedBiseries) -> Result<TruncatedBiseries, FormalError> {
    let a0 = a.coeff(0, 0);
    if !(a0 == BigInt::one() || a0 == -BigInt::one()) {
        return Err(FormalError::NotInvertible(a0.to_string()));
    }
    let degree = a.degree;
    let mut out: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
    out.insert((0, 0), a0.clone());
    for d in 1..=degree {
        for i in 0..=d {
            let j = d - i;
            let mut acc = BigInt::zero();
            for (&(k, l), c) in &a.coeffs {
                if (k, l) == (0, 0) || k > i || l > j {
                    continue;
                }
                if let Some(b) = out.get(&(i - k, j - l)) {
                    acc += c * b;
                }
            }
            if !acc.is_zero() {
                out.insert((i, j), -&a0 * acc);
            }
        }
    }
    Ok(TruncatedBiseries {
        degree,
        coeffs: out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geometric(degree: u32) -> TruncatedBiseries {
        // 1 + q + q^2 + ... + q^D
        let terms: Vec<(u32, u32, i64)> = (0..=degree).map(|i| (i, 0, 1)).collect();
        TruncatedBiseries::from_terms(degree, &terms).unwrap()
    }

    #[test]
    fn unit_is_multiplicative_identity() {
        let a = TruncatedBiseries::from_terms(5, &[(0, 0, 1), (1, 2, -3), (4, 0, 7)]).unwrap();
        let one = TruncatedBiseries::one(5);
        assert_eq!(series_mul(&a, &one).unwrap(), a);
    }

    #[test]
    fn telescoping_geometric_series() {
        let d = 7;
        let one_minus_q = TruncatedBiseries::one_minus_monomial(d, 1, 0);
        let got = series_mul(&one_minus_q, &geometric(d)).unwrap();
        assert_eq!(got, TruncatedBiseries::one(d));
    }

    #[test]
    fn binomial_product_expansion() {
        // (1-q)(1-q^3) to D = 4 is 1 - q - q^3 + q^4
        let a = TruncatedBiseries::one_minus_monomial(4, 1, 0);
        let b = TruncatedBiseries::one_minus_monomial(4, 3, 0);
        let got = series_mul(&a, &b).unwrap();
        let want =
            TruncatedBiseries::from_terms(4, &[(0, 0, 1), (1, 0, -1), (3, 0, -1), (4, 0, 1)])
                .unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn recip_of_unit_is_unit() {
        let one = TruncatedBiseries::one(6);
        assert_eq!(series_recip(&one).unwrap(), one);
    }

    #[test]
    fn recip_of_one_minus_q_is_geometric() {
        let a = TruncatedBiseries::one_minus_monomial(3, 1, 0);
        assert_eq!(series_recip(&a).unwrap(), geometric(3));
    }

    #[test]
    fn recip_of_binomial_product() {
        // 1/((1-q)(1-q^3)) to D = 3 is 1 + q + q^2 + 2 q^3
        let a = series_mul(
            &TruncatedBiseries::one_minus_monomial(3, 1, 0),
            &TruncatedBiseries::one_minus_monomial(3, 3, 0),
        )
        .unwrap();
        let got = series_recip(&a).unwrap();
        let want =
            TruncatedBiseries::from_terms(3, &[(0, 0, 1), (1, 0, 1), (2, 0, 1), (3, 0, 2)])
                .unwrap();
        assert_eq!(got, want);
        // round trip through the implementation under test
        assert_eq!(series_mul(&a, &got).unwrap(), TruncatedBiseries::one(3));
    }

    #[test]
    fn mismatched_degrees_rejected() {
        let a = TruncatedBiseries::one(3);
        let b = TruncatedBiseries::one(4);
        assert!(matches!(
            series_mul(&a, &b),
            Err(FormalError::Parameter(_))
        ));
    }

    #[test]
    fn non_unit_constant_not_invertible() {
        let a = TruncatedBiseries::from_terms(3, &[(0, 0, 2)]).unwrap();
        assert!(matches!(
            series_recip(&a),
            Err(FormalError::NotInvertible(_))
        ));
        let b = TruncatedBiseries::from_terms(3, &[(1, 0, 1)]).unwrap();
        assert!(series_recip(&b).is_err());
    }

    #[test]
    fn bivariate_recip_round_trip() {
        let a = TruncatedBiseries::from_terms(
            6,
            &[(0, 0, -1), (1, 1, 2), (0, 3, -5), (2, 0, 1)],
        )
        .unwrap();
        let inv = series_recip(&a).unwrap();
        assert_eq!(series_mul(&a, &inv).unwrap(), TruncatedBiseries::one(6));
    }
}
