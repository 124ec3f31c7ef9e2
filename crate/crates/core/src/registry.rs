//! Catalog of named integer sequences expressed through inset numbers.
//!
//! Each entry maps a registry index `i >= start` to one inset number (or, for
//! the Fibonacci entry, a sum of them). Two-dimensional families are read by
//! antidiagonals or by rows, matching the corresponding OEIS layout. The
//! `offset` of an entry aligns registry index `i` with b-file index
//! `i + offset`; offsets are found by [`validate`] and frozen in the catalog.

use std::sync::LazyLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::inset::{binomial, inset, InsetIndex, Nat};
use crate::oeis::{BFile, OeisCache, OeisError};

/// Fewest consecutive agreeing terms for an entry to count as validated.
pub const MIN_AGREEMENT: usize = 15;
/// Offsets tried by [`validate`], in `-OFFSET_SEARCH..=OFFSET_SEARCH`.
pub const OFFSET_SEARCH: i64 = 4;

pub type TermFn = fn(u64) -> Vec<InsetIndex>;
pub type ClosedForm = fn(u64) -> Nat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Validated,
    Provisional,
}

#[derive(Debug, Error)]
pub enum RegistryError {
    #[error("unknown sequence key {0:?}")]
    UnknownKey(String),
    #[error("{key}: fixture unavailable")]
    FixtureUnavailable { key: String },
    #[error("{0}: no OEIS id to check against")]
    NoOeisId(String),
    #[error(transparent)]
    Fixture(#[from] OeisError),
}

#[derive(Clone)]
pub struct SequenceEntry {
    pub key: &'static str,
    pub oeis_id: Option<&'static str>,
    pub description: &'static str,
    /// First registry index with a defined term.
    pub start: u64,
    pub terms: TermFn,
    pub closed_form: Option<ClosedForm>,
    pub offset: i64,
    pub status: Status,
}

impl std::fmt::Debug for SequenceEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SequenceEntry")
            .field("key", &self.key)
            .field("oeis_id", &self.oeis_id)
            .field("start", &self.start)
            .field("offset", &self.offset)
            .field("status", &self.status)
            .finish_non_exhaustive()
    }
}

impl SequenceEntry {
    /// The term at registry index `i` (`i >= start`), always computed from
    /// the inset parameterization.
    pub fn value(&self, i: u64) -> Nat {
        (self.terms)(i).into_iter().map(inset).sum()
    }

    pub fn record(&self) -> CatalogRecord {
        CatalogRecord {
            key: self.key,
            oeis_id: self.oeis_id,
            description: self.description,
            start: self.start,
            offset: self.offset,
            status: self.status,
        }
    }
}

/// Serializable view of an entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogRecord {
    pub key: &'static str,
    pub oeis_id: Option<&'static str>,
    pub description: &'static str,
    pub start: u64,
    pub offset: i64,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceSlice {
    pub key: String,
    pub start: u64,
    #[serde(serialize_with = "decimal_vec")]
    pub values: Vec<Nat>,
}

fn decimal_vec<S: serde::Serializer>(v: &[Nat], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

fn decimal<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub offset: i64,
    pub registry_index: u64,
    #[serde(serialize_with = "decimal")]
    pub generated: BigInt,
    #[serde(serialize_with = "decimal")]
    pub fixture: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub key: String,
    pub oeis_id: String,
    pub status: Status,
    pub offset: Option<i64>,
    /// Terms compared at the chosen offset.
    pub compared: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<Mismatch>,
}

fn at(m: u64, n: u64, k: u64) -> InsetIndex {
    let c = |v: u64| u32::try_from(v).expect("inset parameter fits u32");
    InsetIndex::new(c(m), c(n), c(k))
}

fn one(m: u64, n: u64, k: u64) -> Vec<InsetIndex> {
    vec![at(m, n, k)]
}

/// Position `t` of a triangle read by antidiagonals: `(d, j)` with
/// `0 <= j <= d`.
pub fn antidiagonal(t: u64) -> (u64, u64) {
    let mut d = ((8 * t + 1).isqrt() - 1) / 2;
    while d * (d + 1) / 2 > t {
        d -= 1;
    }
    while (d + 1) * (d + 2) / 2 <= t {
        d += 1;
    }
    (d, t - d * (d + 1) / 2)
}

/// Position `t` of a triangle whose row `r` has `r + 2` entries.
fn wide_row(t: u64) -> (u64, u64) {
    let (mut r, mut begin) = (0, 0);
    while begin + r + 2 <= t {
        begin += r + 2;
        r += 1;
    }
    (r, t - begin)
}

/// Number of `d`-cells in the Braun–Hough complex, `{2, n-d+2, 3d-2n}`;
/// zero outside the support.
pub fn braun_hough_cells(n: u64, d: u64) -> Nat {
    if d > n + 2 || 3 * d < 2 * n {
        return Nat::zero();
    }
    inset(at(2, n + 2 - d, 3 * d - 2 * n))
}

/// Dimensions `d` with a possibly nonzero cell count for a given `n`.
fn braun_hough_dims(n: u64) -> std::ops::RangeInclusive<u64> {
    (2 * n).div_ceil(3)..=n + 2
}

fn braun_hough_position(t: u64) -> (u64, u64) {
    let (mut n, mut begin) = (0, 0);
    loop {
        let len = braun_hough_dims(n).count() as u64;
        if begin + len > t {
            return (n, *braun_hough_dims(n).start() + t - begin);
        }
        begin += len;
        n += 1;
    }
}

/// Sulanke number `s(n,k)`, split by the parity of `n + k`.
pub fn sulanke(n: u64, k: u64) -> Nat {
    inset(sulanke_index(n, k))
}

fn sulanke_index(n: u64, k: u64) -> InsetIndex {
    let s = n + k;
    if s.is_multiple_of(2) {
        at(s / 2, s / 2, k)
    } else {
        at((s - 1) / 2, s.div_ceil(2), k)
    }
}

/// Catalan numbers from `C_0 = 1`, `C_{k+1} = Σ C_i C_{k-i}`.
pub fn catalan_numbers(count: usize) -> Vec<Nat> {
    let mut c = vec![Nat::one()];
    while c.len() < count {
        let k = c.len() - 1;
        let next = (0..=k).map(|i| &c[i] * &c[k - i]).sum();
        c.push(next);
    }
    c.truncate(count);
    c
}

fn fibonacci_number(n: u64) -> Nat {
    let (mut a, mut b) = (Nat::zero(), Nat::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Exact quotient of a polynomial expression; panics on a remainder or a
/// negative value, both of which would mean a wrong closed form.
fn exact(num: BigInt, den: u64) -> Nat {
    let (q, r) = num.div_rem(&BigInt::from(den));
    assert!(r.is_zero(), "closed form leaves remainder {r} mod {den}");
    assert!(!q.is_negative(), "closed form is negative: {q}");
    q.magnitude().clone()
}

fn z(i: u64) -> BigInt {
    BigInt::from(i)
}

fn pow2(e: u64) -> BigInt {
    BigInt::one() << e
}

fn centered_octahedral(m: u64) -> Nat {
    let m = z(m);
    exact((2 * &m + 1) * (2 * &m * &m + 2 * &m + 3), 3)
}

fn centered_square(m: u64) -> Nat {
    let m = z(m);
    exact(&m * &m + (&m + 1) * (&m + 1), 1)
}

fn odd(m: u64) -> Nat {
    exact(2 * z(m) + 1, 1)
}

macro_rules! entry {
    ($key:literal, $id:expr, $desc:literal, start $start:literal, offset $offset:literal,
     $terms:expr $(, closed $closed:expr)?) => {
        SequenceEntry {
            key: $key,
            oeis_id: $id,
            description: $desc,
            start: $start,
            terms: $terms,
            closed_form: None $(.or(Some($closed)))?,
            offset: $offset,
            status: if $id.is_some() { Status::Validated } else { Status::Provisional },
        }
    };
}

static CATALOG: LazyLock<Vec<SequenceEntry>> = LazyLock::new(|| {
    vec![
        entry!("odd_numbers", Some("A005408"), "{m,1,1}: odd numbers 2m+1",
            start 0, offset 0, |m| one(m, 1, 1), closed odd),
        entry!("squares", Some("A000290"), "{m,1,2}: squares m^2",
            start 0, offset 0, |m| one(m, 1, 2), closed |m| Nat::from(m * m)),
        entry!("square_pyramidal", Some("A000330"), "{m,1,3}: square pyramidal numbers (m-1)m(2m-1)/6",
            start 0, offset -1, |m| one(m, 1, 3),
            closed |m| { let m = z(m); exact((&m - 1) * &m * (2 * &m - 1), 6) }),
        entry!("pyramidal_4d", Some("A002415"), "{m,1,4}: 4-dimensional pyramidal numbers (m-1)^2((m-1)^2-1)/12",
            start 0, offset -1, |m| one(m, 1, 4),
            closed |m| { let s = (z(m) - 1) * (z(m) - 1); exact(&s * (&s - 1), 12) }),
        entry!("centered_square", Some("A001844"), "{m,2,2}: centered squares m^2+(m+1)^2",
            start 0, offset 0, |m| one(m, 2, 2), closed centered_square),
        entry!("octahedral", Some("A005900"), "{m,2,3}: octahedral numbers m(2m^2+1)/3",
            start 0, offset 0, |m| one(m, 2, 3),
            closed |m| { let m = z(m); exact(&m * (2 * &m * &m + 1), 3) }),
        entry!("centered_octahedral", Some("A001845"), "{m,3,3}: centered octahedral numbers",
            start 0, offset 0, |m| one(m, 3, 3), closed centered_octahedral),
        entry!("centered_polygonal_4d", Some("A006325"), "{m,2,4}: 4-dimensional centered polygonal analog m(m-1)(m^2-m+1)/6",
            start 0, offset -1, |m| one(m, 2, 4),
            closed |m| { let m = z(m); exact(&m * (&m - 1) * (&m * &m - &m + 1), 6) }),
        entry!("dyck_pyramid_weight", Some("A001793"), "{1,n,2}: n(n+3)2^(n-3)",
            start 0, offset 0, |n| one(1, n, 2),
            closed |n| exact(z(n) * (z(n) + 3) * pow2(n), 8)),
        entry!("bishop_moves", Some("A002492"), "{1,n,n-2}: bishop moves on an n x n board, 2n(2n-1)(n-1)/3",
            start 2, offset -1, |n| one(1, n, n - 2),
            closed |n: u64| { let n = z(n); exact(2 * &n * (2 * &n - 1) * (&n - 1), 3) }),
        entry!("squares_convolution", Some("A033455"), "{m,2,5}: convolution of the squares, (m-1)((m-1)^4-1)/30",
            start 0, offset -1, |m| one(m, 2, 5),
            closed |m: u64| { let s: BigInt = z(m) - 1; exact(&s * (s.pow(4) - 1), 30) }),
        entry!("delannoy", Some("A008288"), "{m,n,n}: Delannoy array by antidiagonals",
            start 0, offset 0, |t| { let (d, j) = antidiagonal(t); one(d - j, j, j) }),
        entry!("central_delannoy", Some("A001850"), "{n,n,n}: central Delannoy numbers",
            start 0, offset 0, |n| one(n, n, n)),
        entry!("asymmetric_delannoy", Some("A049600"), "{m,n,m}: asymmetric Delannoy array by antidiagonals",
            start 0, offset 0, |t| { let (d, j) = antidiagonal(t); one(j, d - j, j) }),
        entry!("catalan_scaled", Some("A051960"), "{2k,1,k} = (3k+2) C_k",
            start 0, offset 0, |k| one(2 * k, 1, k),
            closed |k| Nat::from(3 * k + 2) * &catalan_numbers(k as usize + 1)[k as usize]),
        entry!("fibonacci", Some("A000045"), "F_(m+3) = sum_i {m-i,1,i}",
            start 0, offset 3,
            |m| (0..=m.div_ceil(2)).map(|i| at(m - i, 1, i)).collect(),
            closed |m| fibonacci_number(m + 3)),
        entry!("sulanke", Some("A064861"), "Sulanke numbers s(n,k) by antidiagonals, split by parity of n+k",
            start 0, offset 0, |t| { let (d, j) = antidiagonal(t); vec![sulanke_index(d - j, j)] }),
        entry!("crystal_ball_z1", Some("A005408"), "{m,1,1}: crystal ball of Z^1",
            start 0, offset 0, |m| one(m, 1, 1), closed odd),
        entry!("crystal_ball_z2", Some("A001844"), "{m,2,2}: crystal ball of Z^2",
            start 0, offset 0, |m| one(m, 2, 2), closed centered_square),
        entry!("crystal_ball_z3", Some("A001845"), "{m,3,3}: crystal ball of Z^3",
            start 0, offset 0, |m| one(m, 3, 3), closed centered_octahedral),
        entry!("crystal_ball_z4", Some("A001846"), "{m,4,4}: crystal ball of Z^4",
            start 0, offset 0, |m| one(m, 4, 4)),
        entry!("crystal_ball_z5", Some("A001847"), "{m,5,5}: crystal ball of Z^5",
            start 0, offset 0, |m| one(m, 5, 5)),
        entry!("coordination_z3", Some("A005899"), "{m-1,3,2}: coordination sequence of Z^3",
            start 1, offset 0, |m| one(m - 1, 3, 2), closed |m| Nat::from(4 * m * m + 2)),
        entry!("coordination_z4", Some("A008412"), "{m-1,4,3}: coordination sequence of Z^4",
            start 1, offset 0, |m| one(m - 1, 4, 3)),
        entry!("coordination_z5", Some("A008413"), "{m-1,5,4}: coordination sequence of Z^5",
            start 1, offset 0, |m| one(m - 1, 5, 4)),
        entry!("coordination_z6", Some("A008414"), "{m-1,6,5}: coordination sequence of Z^6",
            start 1, offset 0, |m| one(m - 1, 6, 5)),
        entry!("coordination_z7", Some("A008415"), "{m-1,7,6}: coordination sequence of Z^7",
            start 1, offset 0, |m| one(m - 1, 7, 6)),
        entry!("lucas_triangle", Some("A029653"), "{m,1,k}: (2,1)-Pascal triangle by rows",
            start 0, offset 1, |t| { let (m, k) = wide_row(t); one(m, 1, k) }),
        entry!("first_row", Some("A038207"), "{0,n,k} = 2^(n-k) C(n,k) by rows",
            start 0, offset 0, |t| { let (n, k) = antidiagonal(t); one(0, n, k) },
            closed |t| { let (n, k) = antidiagonal(t); exact(pow2(n - k) * BigInt::from(binomial(n, k as i64)), 1) }),
        entry!("weak_comp_2zeros", Some("A058396"), "{3,n,2} = 2^(n-3)(n^2+11n+24)",
            start 0, offset 1, |n| one(3, n, 2),
            closed |n| exact(pow2(n) * (z(n) * z(n) + 11 * z(n) + 24), 8)),
        entry!("turan_triangles", Some("A000297"), "{m+1,2,m}: triangles in a Turan graph",
            start 0, offset 2, |m| one(m + 1, 2, m)),
        entry!("octahedron_surface", Some("A005899"), "{m-1,3,2}: points on the octahedron surface, 4m^2+2",
            start 1, offset 0, |m| one(m - 1, 3, 2), closed |m| Nat::from(4 * m * m + 2)),
        entry!("ccc_cliques", Some("A167667"), "{n,n,1} = 3n 2^(n-1): cliques of cube-connected cycles",
            start 0, offset 0, |n| one(n, n, 1), closed |n| exact(3 * z(n) * pow2(n), 2)),
        entry!("schroeder_peaks", Some("A002002"), "{m,m+1,m+1}: peaks in all Schroeder paths",
            start 0, offset 1, |m| one(m, m + 1, m + 1),
            closed |m| (1..=m + 1).map(|i| binomial(m + 1, i as i64) * binomial(m + i, i as i64 - 1)).sum()),
        entry!("partial_self_maps", Some("A002003"), "{m,m+1,m}: order-preserving partial self maps",
            start 0, offset 1, |m| one(m, m + 1, m),
            closed |m| (0..=m + 1).map(|i| binomial(m + 1, i as i64) * binomial(m + i, i as i64)).sum()),
        entry!("dyck_central_peak", Some("A001105"), "{1,m+1,m} = 2(m+1)^2",
            start 0, offset 1, |m| one(1, m + 1, m), closed |m| Nat::from(2 * (m + 1) * (m + 1))),
        entry!("even_squares_sum", Some("A002492"), "{1,m+2,m}: sum of the first m+1 even squares",
            start 0, offset 1, |m| one(1, m + 2, m),
            closed |m| { let m = z(m); exact(2 * (&m + 1) * (&m + 2) * (2 * &m + 3), 3) }),
        entry!("walk_variance", Some("A072819"), "{1,m+3,m} = 2(m+1)(m+2)^2(m+3)/3",
            start 0, offset 2, |m| one(1, m + 3, m),
            closed |m| { let m = z(m); exact(2 * (&m + 1) * (&m + 2) * (&m + 2) * (&m + 3), 3) }),
        entry!("hyperbola_regions", Some("A058331"), "{3,m,m+1} = 2(m+1)^2+1",
            start 0, offset 1, |m| one(3, m, m + 1), closed |m| Nat::from(2 * (m + 1) * (m + 1) + 1)),
        entry!("dyck_two_levels", Some("A176479"), "{n+1,n-1,n}: Dyck paths with n peaks on each of levels 1 and 2",
            start 1, offset 0, |n| one(n + 1, n - 1, n)),
        entry!("lee_sphere", Some("A181675"), "{n^2,n,n}: lattice points of Lee radius n^2 in Z^n",
            start 0, offset 0, |n| one(n * n, n, n)),
        entry!("braun_hough_cells", Option::<&str>::None, "{2,n-d+2,3d-2n}: d-cells of the Braun-Hough complex, by n then d",
            start 0, offset 0, |t| { let (n, d) = braun_hough_position(t); one(2, n + 2 - d, 3 * d - 2 * n) }),
    ]
});

pub fn list_entries() -> &'static [SequenceEntry] {
    &CATALOG
}

pub fn find(key: &str) -> Result<&'static SequenceEntry, RegistryError> {
    CATALOG
        .iter()
        .find(|e| e.key == key)
        .ok_or_else(|| RegistryError::UnknownKey(key.to_string()))
}

pub fn catalog_records() -> Vec<CatalogRecord> {
    CATALOG.iter().map(SequenceEntry::record).collect()
}

/// The first `count` terms of `key`, starting at its start index.
pub fn generate(key: &str, count: usize) -> Result<SequenceSlice, RegistryError> {
    let e = find(key)?;
    Ok(SequenceSlice {
        key: key.to_string(),
        start: e.start,
        values: (e.start..e.start + count as u64)
            .map(|i| e.value(i))
            .collect(),
    })
}

fn search_order() -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..=OFFSET_SEARCH).flat_map(|o| [-o, o]))
}

/// Aligns `entry` with `fixture` and reports the first offset (trying
/// `0, -1, 1, -2, ...`) under which every overlapping term agrees and at
/// least [`MIN_AGREEMENT`] terms overlap.
pub fn validate_entry(
    entry: &SequenceEntry,
    fixture: &BFile,
) -> Result<ValidationReport, RegistryError> {
    let (Some(first), Some(last)) = (fixture.first_index(), fixture.last_index()) else {
        return Err(RegistryError::FixtureUnavailable {
            key: entry.key.to_string(),
        });
    };
    let oeis_id = fixture.oeis_id.clone();
    let top = last + OFFSET_SEARCH;
    let generated: Vec<BigInt> = if top < entry.start as i64 {
        Vec::new()
    } else {
        (entry.start..=top as u64)
            .map(|i| BigInt::from(entry.value(i)))
            .collect()
    };

    // (offset, compared, first mismatch)
    let mut best: Option<(i64, usize, Option<Mismatch>)> = None;
    for offset in search_order() {
        let mut compared = 0;
        let mut mismatch = None;
        for (j, value) in generated.iter().enumerate() {
            let registry_index = entry.start + j as u64;
            let fixture_index = registry_index as i64 + offset;
            if fixture_index < first || fixture_index > last {
                continue;
            }
            let expected = fixture
                .get(fixture_index)
                .expect("index inside contiguous fixture");
            if value != expected {
                mismatch = Some(Mismatch {
                    offset,
                    registry_index,
                    generated: value.clone(),
                    fixture: expected.clone(),
                });
                break;
            }
            compared += 1;
        }
        if mismatch.is_none() && compared >= MIN_AGREEMENT {
            return Ok(ValidationReport {
                key: entry.key.to_string(),
                oeis_id,
                status: Status::Validated,
                offset: Some(offset),
                compared,
                mismatch: None,
            });
        }
        if best.as_ref().is_none_or(|b| compared > b.1) {
            best = Some((offset, compared, mismatch));
        }
    }
    let (offset, compared, mismatch) = best.expect("search order is nonempty");
    Ok(ValidationReport {
        key: entry.key.to_string(),
        oeis_id,
        status: Status::Provisional,
        offset: mismatch.is_none().then_some(offset),
        compared,
        mismatch,
    })
}

pub fn validate(key: &str, fixture: &BFile) -> Result<ValidationReport, RegistryError> {
    validate_entry(find(key)?, fixture)
}

/// Loads the entry's fixture through `cache` and validates against it.
pub fn crosscheck(key: &str, cache: &OeisCache) -> Result<ValidationReport, RegistryError> {
    let e = find(key)?;
    let id = e
        .oeis_id
        .ok_or_else(|| RegistryError::NoOeisId(key.to_string()))?;
    let fixture = cache.load(id)?;
    validate_entry(e, &fixture)
}
