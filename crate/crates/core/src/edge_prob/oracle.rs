//! Exact edge probability by counting configurations with big integers.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Configuration counts with (`c_connected`) and without (`c_disconnected`)
/// the focal edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialCounts {
    pub c_connected: BigUint,
    pub c_disconnected: BigUint,
}

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        // Exact at every step: acc holds C(n, i) before this update.
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Exact probability that nodes of degree `w_i` and `w_j` are adjacent in a
/// uniformly chosen configuration with `n` nodes and `m` edges:
///
/// ```text
/// C_c = C(n-2, w_i-1) C(n-2, w_j-1) C(C(n-2, 2), m-w_i-w_j+1)
/// C_d = C(n-2, w_i)   C(n-2, w_j)   C(C(n-2, 2), m-w_i-w_j)
/// p   = C_c / (C_c + C_d)
/// ```
pub fn oracle_p(n: u64, m: u64, w_i: u64, w_j: u64) -> Result<(BigRational, BinomialCounts)> {
    if n < 2 {
        return Err(Error::Domain(format!("pair probability needs n >= 2, got {n}")));
    }
    if w_i > n - 1 || w_j > n - 1 {
        return Err(Error::Domain(format!("degrees ({w_i}, {w_j}) exceed n - 1 = {}", n - 1)));
    }
    let rest = n - 2;
    let rest_pairs = rest * rest.saturating_sub(1) / 2;
    let (wi, wj, m) = (w_i as i64, w_j as i64, m as i64);

    let c_connected = binomial(rest, wi - 1) * binomial(rest, wj - 1) * binomial(rest_pairs, m - wi - wj + 1);
    let c_disconnected = binomial(rest, wi) * binomial(rest, wj) * binomial(rest_pairs, m - wi - wj);

    let total = &c_connected + &c_disconnected;
    if total.is_zero() {
        return Err(Error::UndefinedProbability { n, m: m as u64, w_i, w_j });
    }
    let p = BigRational::new(BigInt::from(c_connected.clone()), BigInt::from(total));
    Ok((p, BinomialCounts { c_connected, c_disconnected }))
}
