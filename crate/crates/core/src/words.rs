//! Restricted ternary words.
//!
//! A word satisfies `WordConstraint { m, n, k }` when it has length `m+n`,
//! exactly `k` letters equal to `2`, and no `0` among its first `m` letters.
//! These words are counted by `{m,n choose k}`.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::inset::{binomial, Nat};

/// Longest word [`enumerate`] accepts by default.
pub const DEFAULT_ENUMERATION_CAP: u32 = 20;
/// Longest word [`count_bruteforce`] accepts by default.
pub const DEFAULT_BRUTEFORCE_CAP: u32 = 14;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("word length {length} exceeds the cap of {cap}")]
    CapExceeded { length: u64, cap: u32 },
    #[error("invalid ternary digit {0:?}")]
    InvalidDigit(char),
}

/// Word over `{0, 1, 2}`, stored digit by digit so leading zeros survive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TernaryWord(Vec<u8>);

impl TernaryWord {
    /// # Panics
    /// If any digit is larger than 2.
    pub fn new(digits: Vec<u8>) -> Self {
        assert!(
            digits.iter().all(|&d| d <= 2),
            "ternary digits must be 0, 1 or 2"
        );
        Self(digits)
    }

    pub fn digits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count_twos(&self) -> usize {
        self.0.iter().filter(|&&d| d == 2).count()
    }
}

impl fmt::Display for TernaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.0 {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for TernaryWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                '2' => Ok(2),
                other => Err(WordError::InvalidDigit(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Self)
    }
}

impl Serialize for TernaryWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TernaryWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Words of length `m+n` with exactly `k` twos and a zero-free prefix of
/// length `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WordConstraint {
    pub m: u32,
    pub n: u32,
    pub k: u32,
}

impl WordConstraint {
    pub const fn new(m: u32, n: u32, k: u32) -> Self {
        Self { m, n, k }
    }

    pub fn length(&self) -> u64 {
        u64::from(self.m) + u64::from(self.n)
    }

    fn check_cap(&self, cap: u32) -> Result<(), WordError> {
        if self.length() > u64::from(cap) {
            return Err(WordError::CapExceeded {
                length: self.length(),
                cap,
            });
        }
        Ok(())
    }
}

pub fn is_satisfying(w: &TernaryWord, c: &WordConstraint) -> bool {
    let d = w.digits();
    d.len() as u64 == c.length()
        && w.count_twos() == c.k as usize
        && d.iter().take(c.m as usize).all(|&x| x != 0)
}

/// Lexicographic iterator (digit order `0 < 1 < 2`) over the words satisfying
/// a constraint. Only satisfying words are ever built.
#[derive(Debug, Clone)]
pub struct Words {
    prefix: usize,
    twos: usize,
    current: Option<Vec<u8>>,
    started: bool,
}

impl Words {
    fn new(c: &WordConstraint) -> Self {
        let len = c.length() as usize;
        let twos = c.k as usize;
        let mut it = Self {
            prefix: c.m as usize,
            twos,
            current: None,
            started: false,
        };
        if twos <= len {
            let mut w = vec![0; len];
            it.fill_minimal(&mut w, 0, twos);
            it.current = Some(w);
        }
        it
    }

    fn min_digit(&self, pos: usize) -> u8 {
        u8::from(pos < self.prefix)
    }

    /// Smallest completion of positions `from..` holding exactly `twos` twos:
    /// minimal digits first, all twos pushed to the end.
    fn fill_minimal(&self, w: &mut [u8], from: usize, twos: usize) {
        let split = w.len() - twos;
        for (pos, d) in w.iter_mut().enumerate().skip(from) {
            *d = if pos >= split { 2 } else { self.min_digit(pos) };
        }
    }

    fn advance(&mut self) {
        let Some(mut w) = self.current.take() else {
            return;
        };
        let mut twos_before = w.iter().filter(|&&d| d == 2).count();
        for pos in (0..w.len()).rev() {
            if w[pos] == 2 {
                twos_before -= 1;
            }
            let remaining = w.len() - pos - 1;
            for d in (w[pos] + 1)..=2 {
                let used = twos_before + usize::from(d == 2);
                if used > self.twos || self.twos - used > remaining {
                    continue;
                }
                w[pos] = d;
                self.fill_minimal(&mut w, pos + 1, self.twos - used);
                self.current = Some(w);
                return;
            }
        }
    }
}

impl Iterator for Words {
    type Item = TernaryWord;

    fn next(&mut self) -> Option<TernaryWord> {
        if self.started {
            self.advance();
        }
        self.started = true;
        self.current.clone().map(TernaryWord)
    }
}

/// Lazily enumerates the satisfying words, subject to `cap` on word length.
pub fn words_with_cap(c: &WordConstraint, cap: u32) -> Result<Words, WordError> {
    c.check_cap(cap)?;
    Ok(Words::new(c))
}

pub fn words(c: &WordConstraint) -> Result<Words, WordError> {
    words_with_cap(c, DEFAULT_ENUMERATION_CAP)
}

/// All satisfying words in lexicographic order.
pub fn enumerate(c: &WordConstraint) -> Result<Vec<TernaryWord>, WordError> {
    Ok(words(c)?.collect())
}

pub fn enumerate_with_cap(c: &WordConstraint, cap: u32) -> Result<Vec<TernaryWord>, WordError> {
    Ok(words_with_cap(c, cap)?.collect())
}

/// Histogram over the number of twos of every raw word of length `m+n` whose
/// first `m` letters are nonzero. Scans all `3^(m+n)` words.
pub fn bruteforce_histogram(m: u32, n: u32, cap: u32) -> Result<Vec<Nat>, WordError> {
    let len = u64::from(m) + u64::from(n);
    if len > u64::from(cap) {
        return Err(WordError::CapExceeded { length: len, cap });
    }
    let len = len as usize;
    let mut counts = vec![0u64; len + 1];
    let mut digits = vec![0u8; len];
    loop {
        if digits[..m as usize].iter().all(|&d| d != 0) {
            counts[digits.iter().filter(|&&d| d == 2).count()] += 1;
        }
        // odometer step
        let mut pos = 0;
        loop {
            if pos == len {
                return Ok(counts.into_iter().map(Nat::from).collect());
            }
            if digits[pos] < 2 {
                digits[pos] += 1;
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

/// Test oracle: counts satisfying words by filtering every raw word.
pub fn count_bruteforce(c: &WordConstraint) -> Result<Nat, WordError> {
    count_bruteforce_with_cap(c, DEFAULT_BRUTEFORCE_CAP)
}

pub fn count_bruteforce_with_cap(c: &WordConstraint, cap: u32) -> Result<Nat, WordError> {
    let hist = bruteforce_histogram(c.m, c.n, cap)?;
    Ok(hist.get(c.k as usize).cloned().unwrap_or_else(Nat::zero))
}

/// Classifies the satisfying words by how many of their last `p` letters are
/// nonzero. Entry `i` counts words with exactly `p - i` zeros there.
///
/// # Panics
/// If `p > n`.
pub fn classify_by_tail_zeros(c: &WordConstraint, p: u32) -> Result<Vec<Nat>, WordError> {
    assert!(p <= c.n, "tail length {p} exceeds n = {}", c.n);
    let mut counts = vec![0u64; p as usize + 1];
    let len = c.length() as usize;
    for w in words(c)? {
        let nonzero = w.digits()[len - p as usize..]
            .iter()
            .filter(|&&d| d != 0)
            .count();
        counts[nonzero] += 1;
    }
    Ok(counts.into_iter().map(Nat::from).collect())
}

/// Number of words with exactly `p - i` zeros placed among the last `p`
/// letters: `C(p, i)` placements times the words on the remaining letters.
pub fn tail_zero_class_size(c: &WordConstraint, p: u32, i: u32) -> Nat {
    binomial(p.into(), i.into()) * crate::inset::inset3(c.m + i, c.n - p, c.k)
}
