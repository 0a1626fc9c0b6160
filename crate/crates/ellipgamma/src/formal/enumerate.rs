//! Symbolic factor enumeration of shifted gamma products.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::error::FormalError;
use crate::formal::factor::{Factor, FactorMultiset, Side};

/// All factors (1 − w^k q^α r^β x^{±1}) with α+β ≤ cutoff of the double
/// product defining Γ(z + c0 + c1·τ + c2·σ, m·τ, n·σ), with z kept symbolic
/// through x = e^{2πiz} and w = e^{2πi/order}.
///
/// Denominator factors carry xpow = +1 and rootpow ≡ c0·order; numerator
/// factors carry xpow = −1 and the negated root power. The shift must keep
/// every exponent nonnegative (0 ≤ c1 ≤ m, 0 ≤ c2 ≤ n, c0 ≥ 0) and the
/// denominators of c0, c1, c2 must divide `order` so the e^{2πi·c0} phase is
/// an exact power of w.
pub fn factors_of_gamma(
    shift: (BigRational, BigRational, BigRational),
    m: u32,
    n: u32,
    order: u32,
    cutoff: BigRational,
) -> Result<FactorMultiset, FormalError> {
    let (c0, c1, c2) = shift;
    if m == 0 || n == 0 || order == 0 {
        return Err(FormalError::Parameter(
            "m, n and order must be at least 1".into(),
        ));
    }
    if cutoff.is_negative() {
        return Err(FormalError::Parameter("cutoff must be nonnegative".into()));
    }
    let order_int = BigInt::from(order);
    for c in [&c0, &c1, &c2] {
        if !(c * BigRational::from_integer(order_int.clone())).is_integer() {
            return Err(FormalError::Parameter(format!(
                "shift denominator of {c} does not divide order {order}"
            )));
        }
    }
    let m_rat = BigRational::from_integer(m.into());
    let n_rat = BigRational::from_integer(n.into());
    if c0.is_negative() || c1.is_negative() || c1 > m_rat || c2.is_negative() || c2 > n_rat {
        return Err(FormalError::Parameter(format!(
            "shift ({c0}, {c1}, {c2}) outside the supported range for ({m}, {n})"
        )));
    }

    let den_root = (&c0 * BigRational::from_integer(order_int.clone()))
        .to_integer()
        .mod_floor_u32(order);
    let num_root = if den_root == 0 { 0 } else { order - den_root };

    let mut ms = FactorMultiset::new(order, cutoff.clone())?;

    // denominator side: alpha = j*m + c1, beta = k*n + c2
    let mut j = 0u32;
    loop {
        let alpha = BigRational::from_integer((j as u64 * m as u64).into()) + &c1;
        if alpha > cutoff {
            break;
        }
        let mut k = 0u32;
        loop {
            let beta = BigRational::from_integer((k as u64 * n as u64).into()) + &c2;
            if &alpha + &beta > cutoff {
                break;
            }
            ms.insert(
                Factor::new(alpha.clone(), beta, 1, den_root, Side::Denominator),
                1,
            )?;
            k += 1;
        }
        j += 1;
    }

    // numerator side: alpha = (j+1)*m - c1, beta = (k+1)*n - c2
    let mut j = 0u32;
    loop {
        let alpha = BigRational::from_integer(((j as u64 + 1) * m as u64).into()) - &c1;
        if alpha > cutoff {
            break;
        }
        let mut k = 0u32;
        loop {
            let beta = BigRational::from_integer(((k as u64 + 1) * n as u64).into()) - &c2;
            if &alpha + &beta > cutoff {
                break;
            }
            ms.insert(
                Factor::new(alpha.clone(), beta, -1, num_root, Side::Numerator),
                1,
            )?;
            k += 1;
        }
        j += 1;
    }
    Ok(ms)
}

trait ModFloor {
    fn mod_floor_u32(&self, m: u32) -> u32;
}

impl ModFloor for BigInt {
    fn mod_floor_u32(&self, m: u32) -> u32 {
        let m_big = BigInt::from(m);
        let r = ((self % &m_big) + &m_big) % &m_big;
        r.to_u32().expect("reduced residue fits in u32")
    }
}
