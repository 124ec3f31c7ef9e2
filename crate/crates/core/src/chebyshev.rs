//! Generalized Chebyshev polynomials `P_{m,n}(x) = Σ_k c_m(n,k) x^k` whose
//! coefficients are signed inset numbers.
//!
//! `P_{0,n}` is `U_n` (second kind) and `P_{1,n}` is `T_n` (first kind) for
//! `n >= 1`. For `m >= 2` there is no classical counterpart.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::inset::inset3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    First,
    Second,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneralChebyshevPoly {
    pub m: u32,
    pub n: u32,
    /// Coefficient of `x^k` at index `k`, for `k = 0..=n`.
    #[serde(serialize_with = "decimal_vec")]
    pub coefficients: Vec<BigInt>,
}

fn decimal_vec<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

/// `c_m(n,k) = (-1)^((n-k)/2) {m, (n+k)/2 - m, (n-k)/2}` when `n`, `k` have the
/// same parity, `k <= n` and `(n+k)/2 >= m`; zero otherwise.
pub fn coeff(m: u32, n: u32, k: u32) -> BigInt {
    if k > n || (n - k) % 2 == 1 {
        return BigInt::zero();
    }
    let half_sum = (n + k) / 2;
    let half_diff = (n - k) / 2;
    if half_sum < m {
        return BigInt::zero();
    }
    let magnitude = BigInt::from(inset3(m, half_sum - m, half_diff));
    if half_diff.is_multiple_of(2) {
        magnitude
    } else {
        -magnitude
    }
}

pub fn polynomial(m: u32, n: u32) -> GeneralChebyshevPoly {
    GeneralChebyshevPoly {
        m,
        n,
        coefficients: (0..=n).map(|k| coeff(m, n, k)).collect(),
    }
}

/// Coefficients of `T_n` or `U_n` from the three-term recurrence
/// `next = 2x·cur - prev`, independent of the inset numbers.
pub fn chebyshev_oracle(kind: Kind, n: u32) -> Vec<BigInt> {
    let n = n as usize;
    let mut prev = vec![BigInt::from(1)];
    let mut cur = match kind {
        Kind::First => vec![BigInt::zero(), BigInt::from(1)],
        Kind::Second => vec![BigInt::zero(), BigInt::from(2)],
    };
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += 2 * c;
        }
        for (i, p) in prev.iter().enumerate() {
            next[i] -= p;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}
