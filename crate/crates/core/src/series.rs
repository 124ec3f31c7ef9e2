//! Integer polynomials and truncated formal power series.
//!
//! Every denominator used here has constant term `±1`, so long division never
//! leaves the integers.

use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::inset::{inset3, Nat};

pub const DEFAULT_ORDER: usize = 32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("denominator constant term must be 1 or -1, got {0}")]
    NonUnitConstant(BigInt),
}

/// Polynomial with exact integer coefficients, lowest degree first, trailing
/// zeros trimmed. The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial(Vec<BigInt>);

impl IntPolynomial {
    pub fn new(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Self(coefficients)
    }

    pub fn from_i64(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self(vec![BigInt::one()])
    }

    /// `a + b x`
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_i64(&[a, b])
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coeff(&self, degree: usize) -> BigInt {
        self.0.get(degree).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::default();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

pub fn poly_pow(base: &IntPolynomial, e: u32) -> IntPolynomial {
    base.pow(e)
}

/// Power series known modulo `x^(order+1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TruncatedSeries {
    pub order: usize,
    #[serde(serialize_with = "decimal_vec")]
    pub coefficients: Vec<BigInt>,
}

fn decimal_vec<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

impl TruncatedSeries {
    pub fn coeff(&self, degree: usize) -> &BigInt {
        &self.coefficients[degree]
    }

    /// Product with a polynomial, truncated to this series' order.
    pub fn mul_poly(&self, p: &IntPolynomial) -> TruncatedSeries {
        let mut out = vec![BigInt::zero(); self.order + 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in p.coefficients().iter().enumerate().take(self.order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries {
            order: self.order,
            coefficients: out,
        }
    }
}

/// Long division `num / den` modulo `x^(order+1)`.
pub fn series_div(
    num: &IntPolynomial,
    den: &IntPolynomial,
    order: usize,
) -> Result<TruncatedSeries, SeriesError> {
    let lead = den.coeff(0);
    if lead.abs() != BigInt::one() {
        return Err(SeriesError::NonUnitConstant(lead));
    }
    let mut rem: Vec<BigInt> = (0..=order).map(|i| num.coeff(i)).collect();
    let mut out = Vec::with_capacity(order + 1);
    for i in 0..=order {
        // lead is ±1, so dividing is multiplying
        let q = &rem[i] * &lead;
        for (j, d) in den.coefficients().iter().enumerate().skip(1) {
            if i + j > order {
                break;
            }
            rem[i + j] -= &q * d;
        }
        out.push(q);
    }
    Ok(TruncatedSeries {
        order,
        coefficients: out,
    })
}

fn unit_div(num: IntPolynomial, den: IntPolynomial, order: usize) -> TruncatedSeries {
    series_div(&num, &den, order).expect("denominator has unit constant term")
}

/// `(1+x)^n / (1-x)^(k+1)`, the generating function over `m`.
pub fn gf_in_m(n: u32, k: u32, order: usize) -> TruncatedSeries {
    unit_div(
        IntPolynomial::linear(1, 1).pow(n),
        IntPolynomial::linear(1, -1).pow(k + 1),
        order,
    )
}

/// `(1-x)^m / (1-2x)^(k+1)`, the generating function over `n`.
pub fn gf_in_n(m: u32, k: u32, order: usize) -> TruncatedSeries {
    unit_div(
        IntPolynomial::linear(1, -1).pow(m),
        IntPolynomial::linear(1, -2).pow(k + 1),
        order,
    )
}

/// `(2-x)^n / (1-x)^(m+n+1)`, the generating function over `k`.
pub fn gf_in_k(m: u32, n: u32, order: usize) -> TruncatedSeries {
    unit_div(
        IntPolynomial::linear(2, -1).pow(n),
        IntPolynomial::linear(1, -1).pow(m + n + 1),
        order,
    )
}

/// Which generating function a coefficient law refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GfVariable {
    M,
    N,
    K,
}

/// One coefficient that disagrees with the inset value it should equal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoefficientMismatch {
    pub degree: usize,
    #[serde(serialize_with = "decimal")]
    pub series: BigInt,
    #[serde(serialize_with = "decimal")]
    pub expected: BigInt,
}

fn decimal<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl GfVariable {
    pub fn series(self, a: u32, b: u32, order: usize) -> TruncatedSeries {
        match self {
            Self::M => gf_in_m(a, b, order),
            Self::N => gf_in_n(a, b, order),
            Self::K => gf_in_k(a, b, order),
        }
    }

    /// The inset value the coefficient of `x^degree` must equal, or `None`
    /// where the expansion makes no claim.
    ///
    /// * `M` with `(a, b) = (n, k)`: `{d+k-n, n, k}` for `d >= max(0, n-k)`
    /// * `N` with `(a, b) = (m, k)`: `{m, d+k-m, k}` for `d+k >= m`
    /// * `K` with `(a, b) = (m, n)`: `{m+d, n, d}` for every `d`
    pub fn expected(self, a: u32, b: u32, degree: usize) -> Option<Nat> {
        let d = u32::try_from(degree).ok()?;
        match self {
            Self::M => {
                let (n, k) = (a, b);
                (d + k >= n).then(|| inset3(d + k - n, n, k))
            }
            Self::N => {
                let (m, k) = (a, b);
                (d + k >= m).then(|| inset3(m, d + k - m, k))
            }
            Self::K => {
                let (m, n) = (a, b);
                Some(inset3(m + d, n, d))
            }
        }
    }

    /// Compares every constrained coefficient up to `order`.
    pub fn check(self, a: u32, b: u32, order: usize) -> Vec<CoefficientMismatch> {
        let s = self.series(a, b, order);
        (0..=order)
            .filter_map(|degree| {
                let expected = BigInt::from(self.expected(a, b, degree)?);
                let series = s.coeff(degree).clone();
                (series != expected).then_some(CoefficientMismatch {
                    degree,
                    series,
                    expected,
                })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn pow_examples() {
        assert_eq!(
            poly_pow(&IntPolynomial::linear(1, 1), 2),
            IntPolynomial::from_i64(&[1, 2, 1])
        );
        assert_eq!(
            poly_pow(&IntPolynomial::from_i64(&[3, 5, 7]), 0),
            IntPolynomial::one()
        );
        assert_eq!(
            poly_pow(&IntPolynomial::linear(1, -1), 3),
            IntPolynomial::from_i64(&[1, -3, 3, -1])
        );
    }

    #[test]
    fn trimmed_canonical_form() {
        assert_eq!(
            IntPolynomial::from_i64(&[1, 2, 0, 0]).coefficients().len(),
            2
        );
        assert!(IntPolynomial::from_i64(&[0, 0]).is_zero());
        assert_eq!(IntPolynomial::from_i64(&[0]).degree(), None);
    }

    #[test]
    fn division_examples() {
        let one = IntPolynomial::one();
        assert_eq!(
            series_div(&one, &IntPolynomial::linear(1, -1), 4)
                .unwrap()
                .coefficients,
            ints(&[1, 1, 1, 1, 1])
        );
        assert_eq!(
            series_div(&one, &IntPolynomial::linear(1, -2), 3)
                .unwrap()
                .coefficients,
            ints(&[1, 2, 4, 8])
        );
        let s = series_div(
            &IntPolynomial::linear(1, 1),
            &IntPolynomial::linear(1, -1),
            3,
        )
        .unwrap();
        assert_eq!(s.coefficients, ints(&[1, 2, 2, 2]));
        let back = s.mul_poly(&IntPolynomial::linear(1, -1));
        assert_eq!(back.coefficients, ints(&[1, 1, 0, 0]));
    }

    #[test]
    fn negative_unit_denominator() {
        let s = series_div(&IntPolynomial::one(), &IntPolynomial::linear(-1, 1), 3).unwrap();
        assert_eq!(s.coefficients, ints(&[-1, -1, -1, -1]));
    }

    #[test]
    fn non_unit_constant_rejected() {
        assert_eq!(
            series_div(&IntPolynomial::one(), &IntPolynomial::linear(2, 1), 3),
            Err(SeriesError::NonUnitConstant(BigInt::from(2)))
        );
        assert!(series_div(&IntPolynomial::one(), &IntPolynomial::default(), 3).is_err());
    }

    #[test]
    fn gf_examples() {
        assert_eq!(gf_in_m(0, 0, 5).coefficients, ints(&[1; 6]));
        assert_eq!(*gf_in_m(3, 2, 10).coeff(2), BigInt::from(18));
        assert!(GfVariable::M.check(2, 5, 10).is_empty());
        for m in 0..=10u32 {
            assert_eq!(
                *gf_in_m(2, 5, 10).coeff(m as usize),
                BigInt::from(inset3(m + 3, 2, 5))
            );
        }

        assert_eq!(gf_in_n(0, 0, 5).coefficients, ints(&[1, 2, 4, 8, 16, 32]));
        assert_eq!(*gf_in_n(2, 2, 8).coeff(2), BigInt::from(13));
        for n in 2..=8u32 {
            assert_eq!(
                *gf_in_n(3, 1, 8).coeff(n as usize),
                BigInt::from(inset3(3, n - 2, 1))
            );
        }

        assert_eq!(gf_in_k(0, 0, 5).coefficients, ints(&[1; 6]));
        assert_eq!(*gf_in_k(0, 1, 5).coeff(1), BigInt::from(3));
        assert_eq!(*gf_in_k(1, 3, 6).coeff(2), BigInt::from(inset3(3, 3, 2)));
    }

    #[test]
    fn unconstrained_coefficients_are_not_claimed() {
        // below m0 = n - k the m-expansion makes no claim
        assert_eq!(GfVariable::M.expected(5, 1, 3), None);
        assert!(GfVariable::M.expected(5, 1, 4).is_some());
        assert_eq!(GfVariable::N.expected(4, 1, 2), None);
    }

    fn unit_poly() -> impl Strategy<Value = IntPolynomial> {
        (prop::bool::ANY, prop::collection::vec(-50i64..50, 0..8)).prop_map(|(neg, rest)| {
            let mut c = vec![if neg { -1 } else { 1 }];
            c.extend(rest);
            IntPolynomial::from_i64(&c)
        })
    }

    proptest! {
        #[test]
        fn division_round_trips(
            num in prop::collection::vec(-100i64..100, 0..10),
            den in unit_poly(),
            order in 0usize..=64,
        ) {
            let num = IntPolynomial::from_i64(&num);
            let q = series_div(&num, &den, order).unwrap();
            let back = q.mul_poly(&den);
            for d in 0..=order {
                prop_assert_eq!(back.coeff(d), &num.coeff(d));
            }
        }
    }
}
