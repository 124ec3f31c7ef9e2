//! Binomial coefficients and the inset numbers `{m,n choose k}`.
//!
//! Four independent evaluation routes are provided:
//!
//! * [`inset_alternating`]: signed sum `Σ (-1)^i C(n,i) C(m+2n-2i, n+k)`
//! * [`inset_power_sum`]: `Σ 2^(n-k+i) C(m,i) C(n,k-i)`
//! * [`inset_binomial_sum`]: `Σ C(n,i) C(m+i,k)`, all terms nonnegative
//! * [`inset_dp`]: the recurrence `{m,n,k} = 2{m,n-1,k} + {m,n-1,k-1}`
//!   over `n`, starting from the Pascal row `{m,0,k} = C(m,k)`
//!
//! [`inset`] is the canonical entry point. It evaluates the binomial sum and
//! memoizes the result.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Arbitrary-precision nonnegative integer.
pub type Nat = BigUint;

/// Address `(m, n, k)` of the inset number `{m,n choose k}`.
///
/// `m` is the size of the free block, `n` the number of two-element blocks,
/// `k` the number of elements taken beyond one per block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InsetIndex {
    pub m: u32,
    pub n: u32,
    pub k: u32,
}

impl InsetIndex {
    pub const fn new(m: u32, n: u32, k: u32) -> Self {
        Self { m, n, k }
    }

    /// True when the value is nonzero, i.e. `k <= m + n`.
    pub fn in_support(&self) -> bool {
        u64::from(self.k) <= u64::from(self.m) + u64::from(self.n)
    }
}

impl fmt::Display for InsetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.m, self.n, self.k)
    }
}

impl From<(u32, u32, u32)> for InsetIndex {
    fn from((m, n, k): (u32, u32, u32)) -> Self {
        Self { m, n, k }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InsetError {
    /// The alternating sum came out negative. This is an implementation
    /// bug, never a property of the input.
    #[error("alternating sum for {index} is negative ({value})")]
    NegativeAlternatingSum { index: InsetIndex, value: BigInt },
}

/// `C(a, b)`, zero when `b < 0` or `b > a`.
pub fn binomial(a: u64, b: i64) -> Nat {
    if b < 0 || b as u64 > a {
        return Nat::zero();
    }
    let b = (b as u64).min(a - b as u64);
    let mut acc = Nat::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

fn pow2(e: u64) -> Nat {
    Nat::one() << e
}

/// Alternating-sign route. Kept as a cross-check only.
pub fn inset_alternating(idx: InsetIndex) -> Result<Nat, InsetError> {
    let (m, n, k) = (u64::from(idx.m), u64::from(idx.n), u64::from(idx.k));
    let mut acc = BigInt::zero();
    for i in 0..=n {
        let term =
            BigInt::from(binomial(n, i as i64) * binomial(m + 2 * n - 2 * i, (n + k) as i64));
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    match acc.sign() {
        Sign::Minus => Err(InsetError::NegativeAlternatingSum {
            index: idx,
            value: acc,
        }),
        _ => Ok(acc.magnitude().clone()),
    }
}

/// Power-of-two route. The factor `2^(n-k)` is folded into each term as
/// `2^(n-k+i)`; terms with `C(n, k-i) = 0` are skipped, so the exponent is
/// never negative.
pub fn inset_power_sum(idx: InsetIndex) -> Nat {
    let (m, n, k) = (u64::from(idx.m), u64::from(idx.n), i64::from(idx.k));
    let mut acc = Nat::zero();
    for i in 0..=m {
        let j = k - i as i64;
        if j < 0 || j as u64 > n {
            continue;
        }
        let exp = n - j as u64;
        acc += pow2(exp) * binomial(m, i as i64) * binomial(n, j);
    }
    acc
}

/// Canonical route: `Σ_{i=0}^{n} C(n,i) C(m+i,k)`.
pub fn inset_binomial_sum(idx: InsetIndex) -> Nat {
    let (m, n, k) = (u64::from(idx.m), u64::from(idx.n), i64::from(idx.k));
    (0..=n)
        .map(|i| binomial(n, i as i64) * binomial(m + i, k))
        .sum()
}

type Row = Arc<[Nat]>;

static DP_ROWS: LazyLock<RwLock<HashMap<(u32, u32), Row>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

static MEMO: LazyLock<RwLock<HashMap<InsetIndex, Nat>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// The row `[{m,n,k}]_{k=0..m+n}`, built by the recurrence over `n` and
/// memoized per `(m, n)`.
pub fn dp_row(m: u32, n: u32) -> Row {
    if let Some(row) = DP_ROWS.read().unwrap().get(&(m, n)) {
        return Arc::clone(row);
    }
    // Resume from the deepest cached row below n, if any.
    let cached = {
        let rows = DP_ROWS.read().unwrap();
        (0..n)
            .rev()
            .find_map(|j| rows.get(&(m, j)).map(|r| (j, r.to_vec())))
    };
    let mut fresh = Vec::new();
    let (mut level, mut row) = cached.unwrap_or_else(|| {
        let m64 = u64::from(m);
        let base: Vec<Nat> = (0..=m64).map(|k| binomial(m64, k as i64)).collect();
        fresh.push((0, Row::from(base.clone())));
        (0, base)
    });
    while level < n {
        let mut next = Vec::with_capacity(row.len() + 1);
        for k in 0..=row.len() {
            let mut v = Nat::zero();
            if let Some(same) = row.get(k) {
                v += same << 1u32;
            }
            if k > 0 {
                v += &row[k - 1];
            }
            next.push(v);
        }
        row = next;
        level += 1;
        fresh.push((level, Row::from(row.clone())));
    }
    debug_assert_eq!(row.len(), (m + n) as usize + 1);
    let mut rows = DP_ROWS.write().unwrap();
    for (j, r) in fresh {
        rows.entry((m, j)).or_insert(r);
    }
    Arc::clone(&rows[&(m, n)])
}

/// Dynamic-programming route over `n`.
pub fn inset_dp(idx: InsetIndex) -> Nat {
    if !idx.in_support() {
        return Nat::zero();
    }
    dp_row(idx.m, idx.n)[idx.k as usize].clone()
}

/// `{m,n choose k}`; zero exactly when `k > m + n`.
pub fn inset(idx: InsetIndex) -> Nat {
    if !idx.in_support() {
        return Nat::zero();
    }
    if let Some(v) = MEMO.read().unwrap().get(&idx) {
        return v.clone();
    }
    let v = inset_binomial_sum(idx);
    MEMO.write().unwrap().entry(idx).or_insert(v).clone()
}

/// Convenience form of [`inset`] taking the three parameters directly.
pub fn inset3(m: u32, n: u32, k: u32) -> Nat {
    inset(InsetIndex::new(m, n, k))
}

/// Signed-argument form used by identities: zero when `k < 0`.
///
/// # Panics
/// If `m` or `n` is negative or does not fit in `u32`.
pub fn inset_signed(m: i64, n: i64, k: i64) -> Nat {
    assert!(
        m >= 0 && n >= 0,
        "inset parameters m={m}, n={n} must be nonnegative"
    );
    if k < 0 {
        return Nat::zero();
    }
    let k = u32::try_from(k).unwrap_or(u32::MAX);
    inset3(
        m.try_into().expect("m fits u32"),
        n.try_into().expect("n fits u32"),
        k,
    )
}

/// The array `{m,n,k}` for fixed `n`, one row per `m`.
///
/// Row `m` has `m+n+1` entries, starts with `2^n` and ends with `1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InsetTable {
    pub n: u32,
    pub rows: Vec<Vec<Nat>>,
}

impl InsetTable {
    pub fn row(&self, m: usize) -> Option<&[Nat]> {
        self.rows.get(m).map(Vec::as_slice)
    }
}

/// Builds rows `m = 0..=m_max` of the trapeze for fixed `n`: the first row is
/// `2^(n-k) C(n,k)`, every later entry is the sum of the two entries above it.
pub fn trapeze_table(n: u32, m_max: u32) -> InsetTable {
    let n64 = u64::from(n);
    let first: Vec<Nat> = (0..=n64)
        .map(|k| pow2(n64 - k) * binomial(n64, k as i64))
        .collect();
    let mut rows = vec![first];
    for _ in 0..m_max {
        let prev = rows.last().unwrap();
        let mut next = Vec::with_capacity(prev.len() + 1);
        for k in 0..=prev.len() {
            let mut v = prev.get(k).cloned().unwrap_or_default();
            if k > 0 {
                v += &prev[k - 1];
            }
            next.push(v);
        }
        rows.push(next);
    }
    InsetTable { n, rows }
}
