//! Exhaustive finite-grid verification of the identities satisfied by
//! `{m,n choose k}`.
//!
//! Every check compares exact integers. Cells are visited in lexicographic
//! order of `(m, n, k, p)` and the first failing cell is reported, so a
//! regression always produces the same counterexample.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::inset::{binomial, inset, InsetIndex, Nat};

/// Identity names in declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityId {
    /// `{m,n,k} = {m-1,n,k-1} + {m-1,n,k}`
    Pascal,
    /// `{m,n,k} = {m,n-1,k} + {m+1,n-1,k}`
    VerticalEq3,
    /// `{m,n,k} = 2{m,n-1,k} + {m,n-1,k-1}`
    DoubleEq4,
    /// `{m+1,n-1,k} = Σ_i (-1)^i C(p,i) {m-p+1,n+p-1-i,k}` for `0 <= p <= m`
    AlternatingEe,
    /// `{m+1,n,k+1} = 2^(n-k-1) C(n,k+1) + Σ_{i<=m} {i,n,k}`
    HorizontalRlr,
    /// `{m+1,n,k+1} = Σ_{i<=m} {i,n,k}` for `n <= k <= m+n`
    HorizontalR33,
    /// `{m,n,k} - {m,n-p,k-p} = 2 Σ_{i=1}^{p} {m,n-i,k-i+1}` for `1 <= p <= min(n,k)`
    TelescopingIp,
    /// `{m,n,k} = Σ_i C(p,i) {m+i,n-p,k}` for `0 <= p <= n`
    ZerosPlacementEq9,
    /// `{m,n,k} = Σ_i C(n,i) C(m+i,k)`
    BinomsumEq10,
    /// `{m,n,k} = Σ_i Σ_j C(n,i) C(i,j) C(m,k-i+j)`
    Convolution,
    /// `{m+k-n,n,k} = Σ_i C(n,m-i) C(k+i,k)` for `m+k >= n`
    ShiftedP14,
    /// `{m,n-p,k-p} ≡ {m,n,k} (mod 2)` for `1 <= p <= min(n,k)`
    ParityShift,
    /// `{0,n,k} = 2^(n-k) C(n,k)`, zero for `k > n`
    FirstRow,
}

impl IdentityId {
    pub const ALL: [IdentityId; 13] = [
        Self::Pascal,
        Self::VerticalEq3,
        Self::DoubleEq4,
        Self::AlternatingEe,
        Self::HorizontalRlr,
        Self::HorizontalR33,
        Self::TelescopingIp,
        Self::ZerosPlacementEq9,
        Self::BinomsumEq10,
        Self::Convolution,
        Self::ShiftedP14,
        Self::ParityShift,
        Self::FirstRow,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Pascal => "pascal",
            Self::VerticalEq3 => "vertical_eq3",
            Self::DoubleEq4 => "double_eq4",
            Self::AlternatingEe => "alternating_ee",
            Self::HorizontalRlr => "horizontal_rlr",
            Self::HorizontalR33 => "horizontal_r33",
            Self::TelescopingIp => "telescoping_ip",
            Self::ZerosPlacementEq9 => "zeros_placement_eq9",
            Self::BinomsumEq10 => "binomsum_eq10",
            Self::Convolution => "convolution",
            Self::ShiftedP14 => "shifted_p14",
            Self::ParityShift => "parity_shift",
            Self::FirstRow => "first_row",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown identity {0:?}")]
pub struct UnknownIdentity(pub String);

impl FromStr for IdentityId {
    type Err = UnknownIdentity;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| UnknownIdentity(s.to_string()))
    }
}

/// Parameters of one checked instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub m: u32,
    pub n: u32,
    pub k: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={} n={} k={}", self.m, self.n, self.k)?;
        if let Some(p) = self.p {
            write!(f, " p={p}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub cell: Cell,
    #[serde(serialize_with = "as_decimal")]
    pub lhs: BigInt,
    #[serde(serialize_with = "as_decimal")]
    pub rhs: BigInt,
}

fn as_decimal<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridReport {
    pub identity: IdentityId,
    pub m_max: u32,
    pub n_max: u32,
    pub checked: u64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

type Source<'a> = Box<dyn Fn(InsetIndex) -> Nat + Send + Sync + 'a>;

/// Runs identity checks against a value source. The default source is the
/// canonical [`inset`]; tests substitute faulty sources to make sure the
/// harness notices.
pub struct IdentitySuite<'a> {
    source: Source<'a>,
}

impl Default for IdentitySuite<'_> {
    fn default() -> Self {
        Self::new(inset)
    }
}

impl<'a> IdentitySuite<'a> {
    pub fn new(source: impl Fn(InsetIndex) -> Nat + Send + Sync + 'a) -> Self {
        Self {
            source: Box::new(source),
        }
    }

    /// `{m,n,k}` for signed arguments; zero when `k < 0`.
    fn at(&self, m: i64, n: i64, k: i64) -> BigInt {
        debug_assert!(m >= 0 && n >= 0, "negative block parameter m={m} n={n}");
        if k < 0 {
            return BigInt::zero();
        }
        BigInt::from((self.source)(InsetIndex::new(m as u32, n as u32, k as u32)))
    }

    fn admissible_p(id: IdentityId, m: u32, n: u32, k: u32) -> Vec<Option<u32>> {
        use IdentityId::*;
        match id {
            Pascal if m == 0 => vec![],
            VerticalEq3 | DoubleEq4 if n == 0 => vec![],
            AlternatingEe if n == 0 => vec![],
            AlternatingEe => (0..=m).map(Some).collect(),
            HorizontalR33 if k < n || k > m + n => vec![],
            TelescopingIp | ParityShift => (1..=n.min(k)).map(Some).collect(),
            ZerosPlacementEq9 => (0..=n).map(Some).collect(),
            ShiftedP14 if m + k < n => vec![],
            FirstRow if m != 0 => vec![],
            _ => vec![None],
        }
    }

    /// Both sides of `id` at one cell. For `parity_shift` the sides are the
    /// two values reduced mod 2.
    fn sides(&self, id: IdentityId, cell: Cell) -> (BigInt, BigInt) {
        use IdentityId::*;
        let (m, n, k) = (i64::from(cell.m), i64::from(cell.n), i64::from(cell.k));
        let p = cell.p.map(i64::from).unwrap_or(0);
        let c = |a: i64, b: i64| -> BigInt {
            if a < 0 {
                BigInt::zero()
            } else {
                BigInt::from(binomial(a as u64, b))
            }
        };
        match id {
            Pascal => (
                self.at(m, n, k),
                self.at(m - 1, n, k - 1) + self.at(m - 1, n, k),
            ),
            VerticalEq3 => (
                self.at(m, n, k),
                self.at(m, n - 1, k) + self.at(m + 1, n - 1, k),
            ),
            DoubleEq4 => (
                self.at(m, n, k),
                2 * self.at(m, n - 1, k) + self.at(m, n - 1, k - 1),
            ),
            AlternatingEe => {
                let rhs = (0..=p)
                    .map(|i| {
                        let t = c(p, i) * self.at(m - p + 1, n + p - 1 - i, k);
                        if i % 2 == 0 {
                            t
                        } else {
                            -t
                        }
                    })
                    .sum();
                (self.at(m + 1, n - 1, k), rhs)
            }
            HorizontalRlr => {
                // closed term vanishes with C(n, k+1) when k+1 > n
                let closed = if k < n {
                    (BigInt::one() << (n - k - 1) as u64) * c(n, k + 1)
                } else {
                    BigInt::zero()
                };
                let sum: BigInt = (0..=m).map(|i| self.at(i, n, k)).sum();
                (self.at(m + 1, n, k + 1), closed + sum)
            }
            HorizontalR33 => (
                self.at(m + 1, n, k + 1),
                (0..=m).map(|i| self.at(i, n, k)).sum(),
            ),
            TelescopingIp => {
                let sum: BigInt = (1..=p).map(|i| self.at(m, n - i, k - i + 1)).sum();
                (self.at(m, n, k) - self.at(m, n - p, k - p), 2 * sum)
            }
            ZerosPlacementEq9 => {
                let sum = (0..=p).map(|i| c(p, i) * self.at(m + i, n - p, k)).sum();
                (self.at(m, n, k), sum)
            }
            BinomsumEq10 => (
                self.at(m, n, k),
                (0..=n).map(|i| c(n, i) * c(m + i, k)).sum(),
            ),
            Convolution => {
                let sum = (0..=n)
                    .flat_map(|i| (0..=i).map(move |j| (i, j)))
                    .map(|(i, j)| c(n, i) * c(i, j) * c(m, k - i + j))
                    .sum();
                (self.at(m, n, k), sum)
            }
            ShiftedP14 => {
                let sum = (0..=m).map(|i| c(n, m - i) * c(k + i, k)).sum();
                (self.at(m + k - n, n, k), sum)
            }
            ParityShift => (
                self.at(m, n - p, k - p).mod_floor(&BigInt::from(2)),
                self.at(m, n, k).mod_floor(&BigInt::from(2)),
            ),
            FirstRow => {
                let rhs = if k <= n {
                    (BigInt::one() << (n - k) as u64) * c(n, k)
                } else {
                    BigInt::zero()
                };
                (self.at(0, n, k), rhs)
            }
        }
    }

    /// Checks `id` on `0 <= m <= m_max`, `0 <= n <= n_max`, `0 <= k <= m+n+2`
    /// with every admissible auxiliary parameter `p`.
    pub fn verify(&self, id: IdentityId, m_max: u32, n_max: u32) -> GridReport {
        let mut checked = 0;
        for m in 0..=m_max {
            for n in 0..=n_max {
                for k in 0..=m + n + 2 {
                    for p in Self::admissible_p(id, m, n, k) {
                        let cell = Cell { m, n, k, p };
                        let (lhs, rhs) = self.sides(id, cell);
                        checked += 1;
                        if lhs != rhs {
                            return GridReport {
                                identity: id,
                                m_max,
                                n_max,
                                checked,
                                passed: false,
                                counterexample: Some(Counterexample { cell, lhs, rhs }),
                            };
                        }
                    }
                }
            }
        }
        GridReport {
            identity: id,
            m_max,
            n_max,
            checked,
            passed: true,
            counterexample: None,
        }
    }

    pub fn verify_all(&self, m_max: u32, n_max: u32) -> Vec<GridReport> {
        IdentityId::ALL
            .iter()
            .map(|&id| self.verify(id, m_max, n_max))
            .collect()
    }
}

pub fn verify(id: IdentityId, m_max: u32, n_max: u32) -> GridReport {
    IdentitySuite::default().verify(id, m_max, n_max)
}

/// Looks the identity up by name, then verifies it.
pub fn verify_named(name: &str, m_max: u32, n_max: u32) -> Result<GridReport, UnknownIdentity> {
    Ok(verify(name.parse()?, m_max, n_max))
}

pub fn verify_all(m_max: u32, n_max: u32) -> Vec<GridReport> {
    IdentitySuite::default().verify_all(m_max, n_max)
}
