//! Exact factor multisets for product identities.
//!
//! A factor encodes one term (1 − w^rootpow q^alpha r^beta x^xpow) of a
//! gamma-type product, where w = e^{2πi/n} for the multiset's root order n.
//! Multisets keep signed multiplicities (positive = numerator side), so a
//! factor can never sit on both sides at once: numerator/denominator pairs
//! cancel on insertion and the canonical form is maintained by construction.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::FormalError;

/// Which side of the product a factor lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Numerator,
    Denominator,
}

/// Exponent data identifying a factor (1 − w^rootpow q^alpha r^beta x^xpow).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FactorKey {
    pub alpha: BigRational,
    pub beta: BigRational,
    pub xpow: i64,
    pub rootpow: u32,
}

/// A factor together with its side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub alpha: BigRational,
    pub beta: BigRational,
    pub xpow: i64,
    pub rootpow: u32,
    pub side: Side,
}

impl Factor {
    pub fn new(
        alpha: BigRational,
        beta: BigRational,
        xpow: i64,
        rootpow: u32,
        side: Side,
    ) -> Self {
        Factor {
            alpha,
            beta,
            xpow,
            rootpow,
            side,
        }
    }

    fn key(&self) -> FactorKey {
        FactorKey {
            alpha: self.alpha.clone(),
            beta: self.beta.clone(),
            xpow: self.xpow,
            rootpow: self.rootpow,
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.side {
            Side::Numerator => "num",
            Side::Denominator => "den",
        };
        write!(
            f,
            "{side}:(1 - w^{} q^{} r^{} x^{})",
            self.rootpow, self.alpha, self.beta, self.xpow
        )
    }
}

/// A canonical multiset of factors with a fixed root-of-unity order and an
/// exponent cutoff (every entry has alpha + beta ≤ cutoff).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorMultiset {
    root_order: u32,
    cutoff: BigRational,
    entries: BTreeMap<FactorKey, i64>,
}

impl FactorMultiset {
    pub fn new(root_order: u32, cutoff: BigRational) -> Result<Self, FormalError> {
        if root_order == 0 {
            return Err(FormalError::Parameter("root order must be >= 1".into()));
        }
        Ok(FactorMultiset {
            root_order,
            cutoff,
            entries: BTreeMap::new(),
        })
    }

    pub fn root_order(&self) -> u32 {
        self.root_order
    }

    pub fn cutoff(&self) -> &BigRational {
        &self.cutoff
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of distinct factors (each counted once regardless of multiplicity).
    pub fn distinct_len(&self) -> usize {
        self.entries.len()
    }

    /// Total multiplicity across both sides.
    pub fn total_multiplicity(&self) -> u64 {
        self.entries.values().map(|c| c.unsigned_abs()).sum()
    }

    /// Insert `count` copies of a factor, cancelling against the other side.
    pub fn insert(&mut self, factor: Factor, count: u64) -> Result<(), FormalError> {
        if factor.rootpow >= self.root_order {
            return Err(FormalError::Parameter(format!(
                "rootpow {} out of range for root order {}",
                factor.rootpow, self.root_order
            )));
        }
        if &factor.alpha + &factor.beta > self.cutoff {
            return Err(FormalError::Parameter(format!(
                "factor exponent sum {} exceeds cutoff {}",
                &factor.alpha + &factor.beta,
                self.cutoff
            )));
        }
        let signed = match factor.side {
            Side::Numerator => count as i64,
            Side::Denominator => -(count as i64),
        };
        let key = factor.key();
        let entry = self.entries.entry(key).or_insert(0);
        *entry += signed;
        if *entry == 0 {
            self.entries.remove(&factor.key());
        }
        Ok(())
    }

    /// Merge all entries of `other` into `self` (same root order and cutoff).
    pub fn merge(&mut self, other: &FactorMultiset) -> Result<(), FormalError> {
        self.check_compatible(other)?;
        for (key, &count) in &other.entries {
            let entry = self.entries.entry(key.clone()).or_insert(0);
            *entry += count;
            if *entry == 0 {
                self.entries.remove(key);
            }
        }
        Ok(())
    }

    /// Iterate factors with their multiplicities.
    pub fn iter(&self) -> impl Iterator<Item = (Factor, u64)> + '_ {
        self.entries.iter().map(|(key, &count)| {
            let side = if count > 0 {
                Side::Numerator
            } else {
                Side::Denominator
            };
            (
                Factor::new(
                    key.alpha.clone(),
                    key.beta.clone(),
                    key.xpow,
                    key.rootpow,
                    side,
                ),
                count.unsigned_abs(),
            )
        })
    }

    /// Copy restricted to entries with alpha + beta ≤ cutoff, relabelled with
    /// that cutoff.
    pub fn restrict_to_cutoff(&self, cutoff: BigRational) -> FactorMultiset {
        let entries = self
            .entries
            .iter()
            .filter(|(key, _)| &key.alpha + &key.beta <= cutoff)
            .map(|(key, &count)| (key.clone(), count))
            .collect();
        FactorMultiset {
            root_order: self.root_order,
            cutoff,
            entries,
        }
    }

    /// Divide every x-power by `scale` and drop the root order to 1. Used to
    /// rewrite a collapsed multiset in terms of the variable x^scale. Fails if
    /// any x-power is not divisible or any rootpow is nonzero.
    pub fn rescale_x(&self, scale: i64) -> Result<FactorMultiset, FormalError> {
        let mut entries = BTreeMap::new();
        for (key, &count) in &self.entries {
            if key.rootpow != 0 {
                return Err(FormalError::Parameter(format!(
                    "cannot rescale: residual root power {}",
                    key.rootpow
                )));
            }
            if key.xpow % scale != 0 {
                return Err(FormalError::Parameter(format!(
                    "cannot rescale: x-power {} not divisible by {scale}",
                    key.xpow
                )));
            }
            entries.insert(
                FactorKey {
                    alpha: key.alpha.clone(),
                    beta: key.beta.clone(),
                    xpow: key.xpow / scale,
                    rootpow: 0,
                },
                count,
            );
        }
        Ok(FactorMultiset {
            root_order: 1,
            cutoff: self.cutoff.clone(),
            entries,
        })
    }

    /// Evaluate the product the multiset represents at numeric parameters,
    /// with w = e^{2πi/root_order} and principal-branch rational powers.
    pub fn eval(&self, q: Complex64, r: Complex64, x: Complex64) -> Complex64 {
        let log_q = q.ln();
        let log_r = r.ln();
        let log_x = x.ln();
        let mut num = Complex64::new(1.0, 0.0);
        let mut den = Complex64::new(1.0, 0.0);
        for (key, &count) in &self.entries {
            let alpha = key.alpha.to_f64().unwrap();
            let beta = key.beta.to_f64().unwrap();
            let root_angle =
                std::f64::consts::TAU * key.rootpow as f64 / self.root_order as f64;
            let u = (log_q * alpha
                + log_r * beta
                + log_x * key.xpow as f64
                + Complex64::new(0.0, root_angle))
            .exp();
            let factor = (Complex64::new(1.0, 0.0) - u).powi(count.unsigned_abs() as i32);
            if count > 0 {
                num *= factor;
            } else {
                den *= factor;
            }
        }
        num / den
    }

    fn check_compatible(&self, other: &FactorMultiset) -> Result<(), FormalError> {
        if self.root_order != other.root_order {
            return Err(FormalError::Parameter(format!(
                "root order mismatch: {} vs {}",
                self.root_order, other.root_order
            )));
        }
        if self.cutoff != other.cutoff {
            return Err(FormalError::Parameter(format!(
                "cutoff mismatch: {} vs {}",
                self.cutoff, other.cutoff
            )));
        }
        Ok(())
    }
}

/// Replace every complete family of `n` factors identical except for rootpow
/// spanning {0,…,n−1} (on one side) by the single factor
/// (1 − q^{nα} r^{nβ} x^{n·xpow}), using ∏_k (1 − w^k u) = 1 − u^n.
///
/// Incomplete families are left untouched. Collapsed factors can reach
/// exponent sums up to n times the input cutoff, so the result carries the
/// scaled cutoff (the evaluated value must be preserved, entries cannot be
/// dropped).
pub fn collapse_unity_roots(ms: &FactorMultiset) -> FactorMultiset {
    let n = ms.root_order;
    let scaled_cutoff = &ms.cutoff * BigRational::from_integer(n.into());
    let mut out = FactorMultiset {
        root_order: n,
        cutoff: scaled_cutoff,
        entries: BTreeMap::new(),
    };

    // group by everything except rootpow
    let mut groups: BTreeMap<(BigRational, BigRational, i64), BTreeMap<u32, i64>> =
        BTreeMap::new();
    for (key, &count) in &ms.entries {
        groups
            .entry((key.alpha.clone(), key.beta.clone(), key.xpow))
            .or_default()
            .insert(key.rootpow, count);
    }

    let nq = BigRational::from_integer(n.into());
    for ((alpha, beta, xpow), family) in groups {
        let num_copies = (0..n)
            .map(|k| family.get(&k).copied().unwrap_or(0).max(0))
            .min()
            .unwrap_or(0);
        let den_copies = (0..n)
            .map(|k| (-family.get(&k).copied().unwrap_or(0)).max(0))
            .min()
            .unwrap_or(0);
        let collapsed = num_copies - den_copies; // at most one is nonzero
        if collapsed != 0 {
            let key = FactorKey {
                alpha: &alpha * &nq,
                beta: &beta * &nq,
                xpow: xpow * n as i64,
                rootpow: 0,
            };
            *out.entries.entry(key).or_insert(0) += collapsed;
        }
        for (rootpow, count) in family {
            let rest = count - if count > 0 { num_copies } else { -den_copies };
            if rest != 0 {
                let key = FactorKey {
                    alpha: alpha.clone(),
                    beta: beta.clone(),
                    xpow,
                    rootpow,
                };
                *out.entries.entry(key).or_insert(0) += rest;
            }
        }
    }
    out.entries.retain(|_, c| *c != 0);
    out
}

/// Multiset differences (a∖b, b∖a); both empty iff a = b as multisets.
pub fn multiset_diff(
    a: &FactorMultiset,
    b: &FactorMultiset,
) -> Result<(FactorMultiset, FactorMultiset), FormalError> {
    a.check_compatible(b)?;
    let mut only_a = FactorMultiset {
        root_order: a.root_order,
        cutoff: a.cutoff.clone(),
        entries: BTreeMap::new(),
    };
    let mut only_b = only_a.clone();
    let keys: std::collections::BTreeSet<&FactorKey> =
        a.entries.keys().chain(b.entries.keys()).collect();
    for key in keys {
        let ca = a.entries.get(key).copied().unwrap_or(0);
        let cb = b.entries.get(key).copied().unwrap_or(0);
        // per-side surpluses: a canonical multiset holds a key on one side only
        let a_num = ca.max(0);
        let a_den = (-ca).max(0);
        let b_num = cb.max(0);
        let b_den = (-cb).max(0);
        let da = (a_num - b_num).max(0) - (a_den - b_den).max(0);
        let db = (b_num - a_num).max(0) - (b_den - a_den).max(0);
        if da != 0 {
            only_a.entries.insert(key.clone(), da);
        }
        if db != 0 {
            only_b.entries.insert(key.clone(), db);
        }
    }
    Ok((only_a, only_b))
}
