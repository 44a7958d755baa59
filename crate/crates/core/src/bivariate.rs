//! Bivariate truncated power series and the two-variable Binomiacci
//! generating function
//!
//! ```text
//! G(z, w) = (1 - z - w + zw - z²w²) / ((1 - z - z²)(1 - w - w²)(1 - z - w))
//! ```
//!
//! whose coefficient of zⁿwᵏ is B(k, n). Coefficients are stored as a full
//! rectangular grid `coeffs[k][n]`, exact rationals throughout.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::series::{SeriesError, TruncatedSeries};

/// A (max_k+1) × (max_n+1) grid of exact coefficients of zⁿwᵏ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    coeffs: Vec<Vec<BigRational>>,
}

impl BivariateSeries {
    pub fn zero(max_k: usize, max_n: usize) -> Self {
        Self {
            coeffs: vec![vec![BigRational::zero(); max_n + 1]; max_k + 1],
        }
    }

    /// Polynomial constructor from (k, n, coefficient) terms; terms beyond
    /// the truncation grid are silently dropped.
    pub fn from_integer_terms(terms: &[(usize, usize, i64)], max_k: usize, max_n: usize) -> Self {
        let mut out = Self::zero(max_k, max_n);
        for &(k, n, c) in terms {
            if k <= max_k && n <= max_n {
                out.coeffs[k][n] = BigRational::from_integer(BigInt::from(c));
            }
        }
        out
    }

    pub fn max_k(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn max_n(&self) -> usize {
        self.coeffs[0].len() - 1
    }

    pub fn coeff(&self, k: usize, n: usize) -> &BigRational {
        &self.coeffs[k][n]
    }

    /// Cauchy product, truncated to the smaller grid in each direction.
    pub fn mul(&self, other: &Self) -> Self {
        let mk = self.max_k().min(other.max_k());
        let mn = self.max_n().min(other.max_n());
        let mut out = Self::zero(mk, mn);
        for (ka, row) in self.coeffs.iter().enumerate().take(mk + 1) {
            for (na, a) in row.iter().enumerate().take(mn + 1) {
                if a.is_zero() {
                    continue;
                }
                for (kb, brow) in other.coeffs.iter().enumerate().take(mk + 1 - ka) {
                    for (nb, b) in brow.iter().enumerate().take(mn + 1 - na) {
                        if b.is_zero() {
                            continue;
                        }
                        out.coeffs[ka + kb][na + nb] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Multiplicative inverse on the same grid. The recursion walks cells
    /// row-major and convolves against the nonzero support of `self`, so
    /// inverting a sparse polynomial costs O(|support| · cells).
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let lead = &self.coeffs[0][0];
        if lead.is_zero() {
            return Err(SeriesError::NotInvertible);
        }
        let lead_inv = lead.recip();
        let support: Vec<(usize, usize)> = self
            .coeffs
            .iter()
            .enumerate()
            .flat_map(|(k, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(move |(n, _)| (k, n))
            })
            .filter(|&(k, n)| (k, n) != (0, 0))
            .collect();
        let (mk, mn) = (self.max_k(), self.max_n());
        let mut out = Self::zero(mk, mn);
        out.coeffs[0][0] = lead_inv.clone();
        for k in 0..=mk {
            for n in 0..=mn {
                if k == 0 && n == 0 {
                    continue;
                }
                let mut acc = BigRational::zero();
                for &(p, q) in &support {
                    if p <= k && q <= n {
                        acc += &self.coeffs[p][q] * &out.coeffs[k - p][n - q];
                    }
                }
                if !acc.is_zero() {
                    out.coeffs[k][n] = -(acc * &lead_inv);
                }
            }
        }
        Ok(out)
    }

    /// The univariate diagonal Σ coeffs\[n\]\[n\] sⁿ, up to min(max_k, max_n).
    pub fn diagonal(&self) -> TruncatedSeries {
        let order = self.max_k().min(self.max_n());
        TruncatedSeries::new((0..=order).map(|i| self.coeffs[i][i].clone()).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs
            .iter()
            .all(|row| row.iter().all(|c| c.denom().is_one()))
    }
}

/// Expands G(z, w) on a (max_k+1) × (max_n+1) grid: the numerator
/// polynomial times the inverse of each denominator factor.
pub fn bivariate_gf(max_k: usize, max_n: usize) -> BivariateSeries {
    let numerator = BivariateSeries::from_integer_terms(
        &[(0, 0, 1), (0, 1, -1), (1, 0, -1), (1, 1, 1), (2, 2, -1)],
        max_k,
        max_n,
    );
    let z_factor =
        BivariateSeries::from_integer_terms(&[(0, 0, 1), (0, 1, -1), (0, 2, -1)], max_k, max_n);
    let w_factor =
        BivariateSeries::from_integer_terms(&[(0, 0, 1), (1, 0, -1), (2, 0, -1)], max_k, max_n);
    let mixed_factor =
        BivariateSeries::from_integer_terms(&[(0, 0, 1), (0, 1, -1), (1, 0, -1)], max_k, max_n);
    numerator
        .mul(&z_factor.inverse().expect("constant term is one"))
        .mul(&w_factor.inverse().expect("constant term is one"))
        .mul(&mixed_factor.inverse().expect("constant term is one"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence;

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn gf_known_cells() {
        let g = bivariate_gf(4, 4);
        assert_eq!(g.coeff(0, 0), &rat(1));
        assert_eq!(g.coeff(3, 3), &rat(30));
        assert_eq!(g.coeff(1, 4), &rat(12));
    }

    #[test]
    fn gf_matches_recurrence_on_small_grid() {
        let g = bivariate_gf(12, 12);
        assert!(g.is_integral());
        let t = sequence::table(12, 12);
        for k in 0..=12 {
            for n in 0..=12 {
                assert_eq!(g.coeff(k, n).numer(), t.cell(k, n), "({k},{n})");
            }
        }
    }

    #[test]
    fn diagonal_extraction() {
        let g = bivariate_gf(8, 8);
        let diag = g.diagonal();
        for n in 0..=8 {
            assert_eq!(diag.coeff(n).numer(), &sequence::central(n));
        }

        let identity = BivariateSeries::from_integer_terms(&[(0, 0, 1)], 3, 3);
        let diag = identity.diagonal();
        assert_eq!(diag.coeff(0), &rat(1));
        for n in 1..=3 {
            assert!(diag.coeff(n).is_zero());
        }

        let small = bivariate_gf(2, 2).diagonal();
        assert_eq!(small.coeffs(), &[rat(1), rat(2), rat(8)]);
    }

    /// 1/(1 - z - w) expands to binomial coefficients C(k+n, k).
    #[test]
    #[allow(clippy::needless_range_loop)]
    fn inverse_of_mixed_factor_is_binomial_grid() {
        let inv = BivariateSeries::from_integer_terms(&[(0, 0, 1), (0, 1, -1), (1, 0, -1)], 8, 8)
            .inverse()
            .unwrap();
        let mut binom = [[0i64; 9]; 9];
        for k in 0..9 {
            for n in 0..9 {
                binom[k][n] = if k == 0 || n == 0 {
                    1
                } else {
                    binom[k - 1][n] + binom[k][n - 1]
                };
            }
        }
        for k in 0..=8 {
            for n in 0..=8 {
                assert_eq!(inv.coeff(k, n), &rat(binom[k][n]), "({k},{n})");
            }
        }
    }

    #[test]
    fn inverse_times_original_is_one() {
        let factor = BivariateSeries::from_integer_terms(
            &[(0, 0, 1), (0, 1, -1), (1, 0, -1), (1, 1, 3)],
            6,
            6,
        );
        let prod = factor.inverse().unwrap().mul(&factor);
        for k in 0..=6 {
            for n in 0..=6 {
                let want = if (k, n) == (0, 0) { rat(1) } else { rat(0) };
                assert_eq!(prod.coeff(k, n), &want, "({k},{n})");
            }
        }
    }

    #[test]
    fn inverse_rejects_zero_constant() {
        let s = BivariateSeries::from_integer_terms(&[(0, 1, 1)], 2, 2);
        assert_eq!(s.inverse(), Err(SeriesError::NotInvertible));
    }

    #[test]
    fn rectangular_grids_supported() {
        let g = bivariate_gf(2, 6);
        let t = sequence::table(2, 6);
        for k in 0..=2 {
            for n in 0..=6 {
                assert_eq!(g.coeff(k, n).numer(), t.cell(k, n));
            }
        }
        assert_eq!(g.diagonal().order(), 2);
    }
}
