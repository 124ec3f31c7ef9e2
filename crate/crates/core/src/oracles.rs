//! Brute-force counters that do not touch any inset formula. They exist to
//! check the combinatorial readings of the inset numbers.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::inset::Nat;

pub const MAX_LATTICE_DIM: u32 = 8;
pub const MAX_LATTICE_RADIUS: u32 = 12;
pub const MAX_COMPOSITION_SIZE: u32 = 16;
pub const MAX_DELANNOY: u32 = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("{what} = {value} is outside the supported range (max {max})")]
    BoundsExceeded {
        what: &'static str,
        value: u32,
        max: u32,
    },
    #[error("lattice dimension must be positive")]
    ZeroDimension,
}

fn bound(what: &'static str, value: u32, max: u32) -> Result<(), OracleError> {
    if value > max {
        return Err(OracleError::BoundsExceeded { what, value, max });
    }
    Ok(())
}

/// Lattice paths from `(0,0)` to `(m,n)` with east, north and diagonal steps.
pub fn delannoy_paths(m: u32, n: u32) -> Result<Nat, OracleError> {
    bound("m", m, MAX_DELANNOY)?;
    bound("n", n, MAX_DELANNOY)?;
    let (m, n) = (m as usize, n as usize);
    let mut grid = vec![vec![Nat::zero(); n + 1]; m + 1];
    grid[0][0] = Nat::one();
    for x in 0..=m {
        for y in 0..=n {
            if x == 0 && y == 0 {
                continue;
            }
            let mut v = Nat::zero();
            if x > 0 {
                v += &grid[x - 1][y];
            }
            if y > 0 {
                v += &grid[x][y - 1];
            }
            if x > 0 && y > 0 {
                v += &grid[x - 1][y - 1];
            }
            grid[x][y] = v;
        }
    }
    Ok(grid[m][n].clone())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LatticeMode {
    /// `|x_1| + ... + |x_dim| <= radius`
    Ball,
    /// `|x_1| + ... + |x_dim| = radius`
    Sphere,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticePointQuery {
    pub dim: u32,
    pub radius: u32,
    pub mode: LatticeMode,
}

/// Counts integer points of the `l1` ball or sphere by visiting every point
/// of the box `[-radius, radius]^dim`.
pub fn lattice_points(q: LatticePointQuery) -> Result<Nat, OracleError> {
    if q.dim == 0 {
        return Err(OracleError::ZeroDimension);
    }
    bound("dim", q.dim, MAX_LATTICE_DIM)?;
    bound("radius", q.radius, MAX_LATTICE_RADIUS)?;
    let r = i64::from(q.radius);
    let mut point = vec![-r; q.dim as usize];
    let mut count: u64 = 0;
    loop {
        let norm: i64 = point.iter().map(|x| x.abs()).sum();
        let hit = match q.mode {
            LatticeMode::Ball => norm <= r,
            LatticeMode::Sphere => norm == r,
        };
        if hit {
            count += 1;
        }
        let mut axis = 0;
        loop {
            if axis == point.len() {
                return Ok(Nat::from(count));
            }
            if point[axis] < r {
                point[axis] += 1;
                break;
            }
            point[axis] = -r;
            axis += 1;
        }
    }
}

/// Number of finite sequences of nonnegative integers summing to `total` with
/// exactly `zeros` entries equal to zero, over every sequence length.
///
/// Each sequence is built one entry at a time and counted once when complete.
pub fn weak_compositions_with_zeros(total: u32, zeros: u32) -> Result<Nat, OracleError> {
    bound("total + zeros", total + zeros, MAX_COMPOSITION_SIZE)?;

    fn extend(remaining: u32, zeros_left: u32) -> u64 {
        // stopping here is the only completion once nothing is left
        let mut count = u64::from(remaining == 0 && zeros_left == 0);
        if zeros_left > 0 {
            count += extend(remaining, zeros_left - 1);
        }
        for part in 1..=remaining {
            count += extend(remaining - part, zeros_left);
        }
        count
    }

    Ok(Nat::from(extend(total, zeros)))
}
