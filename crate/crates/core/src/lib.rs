//! Exact inset numbers `{m,n choose k}` and the objects they count.
//!
//! An inset number counts the `(n+k)`-subsets of a set made of `n` two-element
//! blocks plus one free block of size `m` that meet every two-element block.
//! Equivalently, it counts ternary words of length `m+n` with exactly `k`
//! letters equal to `2` and no `0` among the first `m` letters.
//!
//! The crate computes these numbers by several independent routes
//! ([`inset`]), enumerates the words ([`words`]), checks the identities and
//! generating functions they satisfy ([`identities`], [`series`]), relates them
//! to Chebyshev coefficients ([`chebyshev`]) and to brute-force lattice
//! counts ([`oracles`]), and serves a catalog of named integer sequences
//! cross-checked against OEIS b-files ([`registry`], [`oeis`]).

pub mod chebyshev;
pub mod identities;
pub mod inset;
pub mod oeis;
pub mod oracles;
pub mod registry;
pub mod series;
pub mod words;

pub use inset::{binomial, inset, InsetIndex, InsetTable, Nat};
pub use words::{TernaryWord, WordConstraint};
