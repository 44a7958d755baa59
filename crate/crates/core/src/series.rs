//! Truncated formal power series over exact rationals.
//!
//! A series is a dense coefficient vector; the coefficient of the i-th
//! power of the formal variable sits at index i. Truncation is silent:
//! binary operations truncate to the smaller order, constructors take an
//! explicit order. On top of the arithmetic this module builds the three
//! Binomiacci generating functions:
//!
//! * [`fibonacci_gf`] — 1/(1 - z - z²), the k = 0 row;
//! * [`row_gf`] — the k-th row series A_k(z), with \[zⁿ\] A_k = B(k, n);
//! * [`central_gf`] — C(s) = (s-1)(√(1-4s) - s) / ((s²+4s-1)√(1-4s)),
//!   with \[sⁿ\] C = B(n, n).

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt;

/// Error cases of the partial series operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    /// Multiplicative inverse of a series with zero constant term.
    NotInvertible,
    /// Square root of a series whose constant term is not one.
    NonUnitSqrtConstant,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::NotInvertible => write!(f, "not invertible: zero constant term"),
            SeriesError::NonUnitSqrtConstant => write!(f, "sqrt requires unit constant term"),
        }
    }
}

impl std::error::Error for SeriesError {}

/// A formal power series truncated at a fixed order, coefficients exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    /// Wraps a coefficient vector; the order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least a constant term");
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn constant(value: BigRational, order: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); order + 1];
        coeffs[0] = value;
        Self { coeffs }
    }

    /// Polynomial constructor: low-order coefficients from `coeffs`, zero
    /// padded (or silently truncated) to the requested order.
    pub fn from_integer_coeffs(coeffs: &[i64], order: usize) -> Self {
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, c) in coeffs.iter().enumerate().take(order + 1) {
            out[i] = BigRational::from_integer(BigInt::from(*c));
        }
        Self { coeffs: out }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Restrict (or zero-extend) to the given order.
    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, BigRational::zero());
        Self { coeffs }
    }

    /// Coefficient-wise sum, truncated to the smaller order.
    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] + &other.coeffs[i])
            .collect();
        Self { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] - &other.coeffs[i])
            .collect();
        Self { coeffs }
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        Self { coeffs: out }
    }

    /// Multiplicative inverse up to `order`, by the convolution recursion
    /// b(0) = 1/a(0), b(n) = -(Σ_{i=1..n} a(i) b(n-i)) / a(0).
    ///
    /// Coefficients of `self` beyond its own order are treated as zero, so
    /// a low-degree polynomial inverts to any requested order.
    pub fn inverse(&self, order: usize) -> Result<Self, SeriesError> {
        let lead = &self.coeffs[0];
        if lead.is_zero() {
            return Err(SeriesError::NotInvertible);
        }
        let lead_inv = lead.recip();
        let mut out = Vec::with_capacity(order + 1);
        out.push(lead_inv.clone());
        for n in 1..=order {
            let mut acc = BigRational::zero();
            for i in 1..=n.min(self.order()) {
                if self.coeffs[i].is_zero() {
                    continue;
                }
                acc += &self.coeffs[i] * &out[n - i];
            }
            out.push(-(acc * &lead_inv));
        }
        Ok(Self { coeffs: out })
    }

    /// Square root with constant term +1, by the direct recursion from
    /// b² = a: b(0) = 1, b(n) = (a(n) - Σ_{i=1..n-1} b(i) b(n-i)) / 2.
    pub fn sqrt(&self, order: usize) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::NonUnitSqrtConstant);
        }
        let two = BigRational::from_integer(BigInt::from(2));
        let mut out: Vec<BigRational> = Vec::with_capacity(order + 1);
        out.push(BigRational::one());
        for n in 1..=order {
            let mut acc = if n <= self.order() {
                self.coeffs[n].clone()
            } else {
                BigRational::zero()
            };
            for i in 1..n {
                acc -= &out[i] * &out[n - i];
            }
            out.push(acc / &two);
        }
        Ok(Self { coeffs: out })
    }

    /// True when every coefficient reduces to denominator one.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    /// Partial-sum evaluation at a real point (coefficients cast to f64).
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| {
            acc * x + c.to_f64().expect("coefficient fits in f64")
        })
    }

    /// Partial-sum evaluation at a complex point.
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| {
                acc * z + c.to_f64().expect("coefficient fits in f64")
            })
    }
}

/// The Fibonacci generating function 1/(1 - z - z²), truncated at `order`.
pub fn fibonacci_gf(order: usize) -> TruncatedSeries {
    TruncatedSeries::from_integer_coeffs(&[1, -1, -1], order)
        .inverse(order)
        .expect("constant term is one")
}

/// The row generating function A_k(z) with \[zⁿ\] A_k = B(k, n).
///
/// Built by the recursion A_{k+1} = (A_k + F(k-1)) / (1 - z) starting from
/// A_0 = 1/(1 - z - z²), with F(-1) = 0 on the first step. For k ≥ 2 this
/// equals 1/((1-z)^k (1-z-z²)) + Σ_{i=0}^{k-2} F(i)/(1-z)^{k-1-i}; the
/// printed form of that closed expression with a first-power (1-z) factor
/// contradicts the recurrence (see ERRATA.md), so the recursion is the
/// implementation of record and the corrected closed form is a test.
pub fn row_gf(k: usize, order: usize) -> TruncatedSeries {
    let geometric = TruncatedSeries::from_integer_coeffs(&[1, -1], order)
        .inverse(order)
        .expect("constant term is one");
    let mut row = fibonacci_gf(order);
    for i in 1..=k {
        let boundary = if i >= 2 {
            crate::sequence::fibonacci(i - 2)
        } else {
            BigInt::zero()
        };
        let shifted = row.add(&TruncatedSeries::constant(
            BigRational::from_integer(boundary),
            order,
        ));
        row = shifted.mul(&geometric);
    }
    row
}

/// The central generating function, with \[sⁿ\] C = B(n, n):
///
/// ```text
/// C(s) = (s - 1)(√(1 - 4s) - s) / ((s² + 4s - 1) √(1 - 4s))
/// ```
///
/// expanded exactly over the rationals.
pub fn central_gf(order: usize) -> TruncatedSeries {
    let root = TruncatedSeries::from_integer_coeffs(&[1, -4], order)
        .sqrt(order)
        .expect("constant term is one");
    let s = TruncatedSeries::from_integer_coeffs(&[0, 1], order);
    let numerator = TruncatedSeries::from_integer_coeffs(&[-1, 1], order).mul(&root.sub(&s));
    let denominator = TruncatedSeries::from_integer_coeffs(&[-1, 4, 1], order).mul(&root);
    numerator.mul(
        &denominator
            .inverse(order)
            .expect("constant term is minus one"),
    )
}
