//! Singularity-analysis estimates for the central Binomiacci numbers.
//!
//! C(s) splits at its dominant singularity, the branch point s = 1/4, as
//!
//! ```text
//! C(s) = f0(s) + g(s) / √(1 - 4s),
//! f0(s) = (s - 1)/(s² + 4s - 1),   g(s) = (s - s²)/(s² + 4s - 1),
//! ```
//!
//! with f0 and g analytic near 1/4 and g(1/4) = 3. The general
//! algebraic-singularity leading term for a generating function with
//! singularities (α, ω, g(α)) on its circle of convergence is
//!
//! ```text
//! a(n) ≈ (1/n) Σ g(α) n^ω / (Γ(ω) αⁿ)
//! ```
//!
//! which specializes here to B(n, n) ≈ 3·4ⁿ/√(πn). The estimate is
//! evaluated in log space so that its logarithm stays finite long after
//! the value itself has left f64 range (around n = 510 for α = 1/4).

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use std::f64::consts::PI;
use std::fmt;

/// Largest n for which the coarse estimate still fits in an f64; the
/// ratio table refuses to go past it rather than emit infinities.
pub const MAX_RATIO_TABLE_N: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AsymptoticsError {
    /// The estimate formula divides by n, so n = 0 is rejected.
    IndexZero,
    /// Gamma is only evaluated for positive arguments.
    NonPositiveArgument,
    /// α must be nonzero and ω must not be a non-positive integer.
    InvalidSingularity,
    /// The requested table extends past [`MAX_RATIO_TABLE_N`].
    EstimateOverflow,
}

impl fmt::Display for AsymptoticsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AsymptoticsError::IndexZero => write!(f, "n must be at least 1"),
            AsymptoticsError::NonPositiveArgument => {
                write!(f, "gamma argument must be positive")
            }
            AsymptoticsError::InvalidSingularity => {
                write!(
                    f,
                    "singularity must have nonzero location and admissible exponent"
                )
            }
            AsymptoticsError::EstimateOverflow => {
                write!(f, "estimate exceeds f64 range past n = 500")
            }
        }
    }
}

impl std::error::Error for AsymptoticsError {}

/// One algebraic singularity (α, ω, g(α)) of a generating function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlgebraicSingularity {
    alpha: f64,
    omega: f64,
    g_at_alpha: f64,
}

impl AlgebraicSingularity {
    pub fn new(alpha: f64, omega: f64, g_at_alpha: f64) -> Result<Self, AsymptoticsError> {
        let omega_is_nonpositive_integer = omega <= 0.0 && omega.fract() == 0.0;
        if alpha == 0.0 || !alpha.is_finite() || !omega.is_finite() || omega_is_nonpositive_integer
        {
            return Err(AsymptoticsError::InvalidSingularity);
        }
        Ok(Self {
            alpha,
            omega,
            g_at_alpha,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn g_at_alpha(&self) -> f64 {
        self.g_at_alpha
    }
}

/// A rational function with integer polynomial coefficients, low order
/// first. Small helper for the decomposition pieces; exact evaluation is
/// available so that values like g(1/4) = 3 are computed, not quoted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    numerator: Vec<i64>,
    denominator: Vec<i64>,
}

impl RationalFunction {
    pub fn new(numerator: Vec<i64>, denominator: Vec<i64>) -> Self {
        Self {
            numerator,
            denominator,
        }
    }

    fn horner_f64(coeffs: &[i64], x: f64) -> f64 {
        coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c as f64)
    }

    fn horner_exact(coeffs: &[i64], x: &BigRational) -> BigRational {
        coeffs.iter().rev().fold(BigRational::zero(), |acc, &c| {
            acc * x + BigRational::from_integer(BigInt::from(c))
        })
    }

    pub fn eval(&self, x: f64) -> f64 {
        Self::horner_f64(&self.numerator, x) / Self::horner_f64(&self.denominator, x)
    }

    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        let horner = |coeffs: &[i64]| {
            coeffs
                .iter()
                .rev()
                .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * x + c as f64)
        };
        horner(&self.numerator) / horner(&self.denominator)
    }

    /// Exact rational evaluation; `None` when the denominator vanishes.
    pub fn eval_exact(&self, x: &BigRational) -> Option<BigRational> {
        let den = Self::horner_exact(&self.denominator, x);
        if den.is_zero() {
            return None;
        }
        Some(Self::horner_exact(&self.numerator, x) / den)
    }
}

/// The decomposition of C(s) at its branch point.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralDecomposition {
    /// f0(s) = (s - 1)/(s² + 4s - 1), analytic near s = 1/4.
    pub analytic_part: RationalFunction,
    /// g(s) = (s - s²)/(s² + 4s - 1), the coefficient of (1 - 4s)^{-1/2}.
    pub singular_coefficient: RationalFunction,
    /// (α, ω, g(α)) = (1/4, 1/2, 3).
    pub singularity: AlgebraicSingularity,
}

/// Splits C(s) as f0(s) + g(s)/√(1 - 4s) and records the singularity
/// data; g(1/4) is evaluated by exact rational arithmetic.
pub fn decompose_central_gf() -> CentralDecomposition {
    let analytic_part = RationalFunction::new(vec![-1, 1], vec![-1, 4, 1]);
    let singular_coefficient = RationalFunction::new(vec![0, 1, -1], vec![-1, 4, 1]);
    let alpha = BigRational::new(BigInt::from(1), BigInt::from(4));
    let g_at_alpha = singular_coefficient
        .eval_exact(&alpha)
        .expect("s² + 4s - 1 does not vanish at 1/4")
        .to_f64()
        .expect("g(1/4) fits in f64");
    let singularity = AlgebraicSingularity::new(0.25, 0.5, g_at_alpha)
        .expect("branch-point parameters are admissible");
    CentralDecomposition {
        analytic_part,
        singular_coefficient,
        singularity,
    }
}

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

fn lanczos_sum(x: f64) -> f64 {
    let mut acc = LANCZOS_COEFFS[0];
    for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    acc
}

fn gamma_unchecked(x: f64) -> f64 {
    if x < 0.5 {
        // reflection: Γ(x) Γ(1-x) = π / sin(πx)
        PI / ((PI * x).sin() * gamma_unchecked(1.0 - x))
    } else {
        let x = x - 1.0;
        let t = x + LANCZOS_G + 0.5;
        (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * lanczos_sum(x)
    }
}

fn ln_gamma_positive(x: f64) -> f64 {
    if x < 0.5 {
        PI.ln() - (PI * x).sin().ln() - ln_gamma_positive(1.0 - x)
    } else {
        let x = x - 1.0;
        let t = x + LANCZOS_G + 0.5;
        0.5 * (2.0 * PI).ln() + (x + 0.5) * t.ln() - t + lanczos_sum(x).ln()
    }
}

/// ln |Γ(x)| and the sign of Γ(x), defined for any non-pole x.
fn ln_gamma_signed(x: f64) -> (f64, f64) {
    if x > 0.0 {
        (1.0, ln_gamma_positive(x))
    } else {
        // reflection; Γ(1-x) > 0 here, so the sign is that of sin(πx)
        let sine = (PI * x).sin();
        let sign = if sine >= 0.0 { 1.0 } else { -1.0 };
        (sign, PI.ln() - sine.abs().ln() - ln_gamma_positive(1.0 - x))
    }
}

/// Γ(x) for x > 0, accurate to better than 1e-12 relative.
pub fn gamma_positive(x: f64) -> Result<f64, AsymptoticsError> {
    if !x.is_finite() || x <= 0.0 {
        return Err(AsymptoticsError::NonPositiveArgument);
    }
    Ok(gamma_unchecked(x))
}

/// Sign and natural log of one leading term g(α) n^ω / (n Γ(ω) αⁿ).
fn term_signed_ln(sing: &AlgebraicSingularity, n: u64) -> (f64, f64) {
    let nf = n as f64;
    let (gamma_sign, gamma_ln) = ln_gamma_signed(sing.omega);
    let mut sign = gamma_sign;
    if sing.g_at_alpha < 0.0 {
        sign = -sign;
    }
    if sing.g_at_alpha == 0.0 {
        return (0.0, f64::NEG_INFINITY);
    }
    if sing.alpha < 0.0 && n % 2 == 1 {
        sign = -sign;
    }
    let ln_abs = sing.g_at_alpha.abs().ln() + sing.omega * nf.ln()
        - gamma_ln
        - nf * sing.alpha.abs().ln()
        - nf.ln();
    (sign, ln_abs)
}

/// Sign and natural log of a sum of signed log-space terms.
fn signed_log_sum(terms: &[(f64, f64)]) -> (f64, f64) {
    let peak = terms
        .iter()
        .map(|&(_, ln)| ln)
        .fold(f64::NEG_INFINITY, f64::max);
    if peak == f64::NEG_INFINITY {
        return (0.0, f64::NEG_INFINITY);
    }
    let scaled: f64 = terms
        .iter()
        .map(|&(sign, ln)| sign * (ln - peak).exp())
        .sum();
    if scaled == 0.0 {
        (0.0, f64::NEG_INFINITY)
    } else {
        (scaled.signum(), peak + scaled.abs().ln())
    }
}

/// Signed log-space estimate: the leading-term sum over the given
/// singularities, returned as (sign, ln |value|). Finite for n far past
/// the overflow point of the plain estimate.
pub fn algebraic_estimate_ln(
    singularities: &[AlgebraicSingularity],
    n: u64,
) -> Result<(f64, f64), AsymptoticsError> {
    if n == 0 {
        return Err(AsymptoticsError::IndexZero);
    }
    let terms: Vec<(f64, f64)> = singularities.iter().map(|s| term_signed_ln(s, n)).collect();
    Ok(signed_log_sum(&terms))
}

/// The leading-term estimate (1/n) Σ g(α) n^ω / (Γ(ω) αⁿ) as an f64.
/// Computed through the log-space path; overflows to infinity once the
/// value itself exceeds f64 range.
pub fn algebraic_estimate(
    singularities: &[AlgebraicSingularity],
    n: u64,
) -> Result<f64, AsymptoticsError> {
    let (sign, ln_abs) = algebraic_estimate_ln(singularities, n)?;
    Ok(sign * ln_abs.exp())
}

/// The coarse estimate 3·4ⁿ/√(πn), evaluated directly. Kept independent
/// of [`algebraic_estimate`] so the two routes can be checked against
/// each other.
pub fn coarse_estimate(n: u64) -> Result<f64, AsymptoticsError> {
    if n == 0 {
        return Err(AsymptoticsError::IndexZero);
    }
    Ok(3.0 * 4.0f64.powi(n as i32) / (PI * n as f64).sqrt())
}

/// ln of the coarse estimate; finite for any n ≥ 1 of practical size.
pub fn coarse_estimate_ln(n: u64) -> Result<f64, AsymptoticsError> {
    if n == 0 {
        return Err(AsymptoticsError::IndexZero);
    }
    let nf = n as f64;
    Ok(3.0f64.ln() + nf * 4.0f64.ln() - 0.5 * (PI * nf).ln())
}

/// One row of the exact-vs-estimate comparison table.
#[derive(Debug, Clone, PartialEq)]
pub struct EstimateRow {
    pub n: usize,
    pub exact: BigInt,
    pub estimate: f64,
    pub ratio: f64,
}

/// Rows (n, B(n,n), 3·4ⁿ/√(πn), estimate/exact) for n = 1..=n_max.
pub fn ratio_table(n_max: usize) -> Result<Vec<EstimateRow>, AsymptoticsError> {
    if n_max == 0 {
        return Err(AsymptoticsError::IndexZero);
    }
    if n_max > MAX_RATIO_TABLE_N {
        return Err(AsymptoticsError::EstimateOverflow);
    }
    let diagonal = crate::sequence::table(n_max, n_max).diagonal();
    let mut rows = Vec::with_capacity(n_max);
    for (n, exact) in diagonal.into_iter().enumerate().skip(1) {
        let estimate = coarse_estimate(n as u64)?;
        let ratio = estimate / exact.to_f64().expect("central value fits in f64");
        rows.push(EstimateRow {
            n,
            exact,
            estimate,
            ratio,
        });
    }
    Ok(rows)
}

/// Exact witness for the singularity inventory of C, on ℤ[√5] with
/// numbers represented as integer pairs (a, b) ↦ a + b√5.
///
/// Checks that both roots -2 ± √5 annihilate s² + 4s - 1, and that at
/// the smaller-modulus root √5 - 2 the branch argument is the perfect
/// square 1 - 4s = 9 - 4√5 = (√5 - 2)². Since √5 - 2 > 0, the principal
/// square root there is s itself, so the numerator factor √(1 - 4s) - s
/// vanishes together with the denominator: the point is removable. At
/// the conjugate root the principal root is -s, and the numerator stays
/// nonzero, so that pole is genuine.
pub fn removable_singularity_witness() -> bool {
    let square = |(a, b): (i64, i64)| (a * a + 5 * b * b, 2 * a * b);
    let one_minus_4s = |(a, b): (i64, i64)| (1 - 4 * a, -4 * b);
    let quadratic = |(a, b): (i64, i64)| {
        let (p, q) = square((a, b));
        (p + 4 * a - 1, q + 4 * b)
    };

    let small_root = (-2i64, 1i64); // √5 - 2
    let conjugate_root = (-2i64, -1i64); // -√5 - 2

    let squared = square(small_root);
    squared == (9, -4)
        && squared == one_minus_4s(small_root)
        && quadratic(small_root) == (0, 0)
        && quadratic(conjugate_root) == (0, 0)
        // at the conjugate root, 1 - 4s = (2 + √5)² = (-s)², not s²
        && one_minus_4s(conjugate_root) == square((2, 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::residues::eval_c;
    use num_complex::Complex64;

    #[test]
    fn gamma_classical_values() {
        assert!((gamma_positive(0.5).unwrap() - PI.sqrt()).abs() < 1e-12 * PI.sqrt());
        assert!((gamma_positive(1.0).unwrap() - 1.0).abs() < 1e-12);
        assert!((gamma_positive(5.0).unwrap() - 24.0).abs() < 1e-12 * 24.0);
        let mut factorial = 1.0;
        for n in 1..=15u32 {
            assert!(
                (gamma_positive(n as f64).unwrap() - factorial).abs() < 1e-12 * factorial,
                "gamma({n})"
            );
            factorial *= n as f64;
        }
    }

    #[test]
    fn gamma_rejects_non_positive() {
        assert_eq!(
            gamma_positive(0.0),
            Err(AsymptoticsError::NonPositiveArgument)
        );
        assert_eq!(
            gamma_positive(-1.5),
            Err(AsymptoticsError::NonPositiveArgument)
        );
    }

    #[test]
    fn singularity_validation() {
        assert!(AlgebraicSingularity::new(0.25, 0.5, 3.0).is_ok());
        assert!(AlgebraicSingularity::new(0.0, 0.5, 3.0).is_err());
        assert!(AlgebraicSingularity::new(0.25, 0.0, 3.0).is_err());
        assert!(AlgebraicSingularity::new(0.25, -2.0, 3.0).is_err());
        assert!(AlgebraicSingularity::new(0.25, -0.5, 3.0).is_ok());
    }

    #[test]
    fn decomposition_is_exact_at_quarter() {
        let d = decompose_central_gf();
        assert_eq!(d.singularity.alpha(), 0.25);
        assert_eq!(d.singularity.omega(), 0.5);
        assert_eq!(d.singularity.g_at_alpha(), 3.0);

        let quarter = BigRational::new(BigInt::from(1), BigInt::from(4));
        let exact = d.singular_coefficient.eval_exact(&quarter).unwrap();
        assert_eq!(exact, BigRational::from_integer(BigInt::from(3)));
    }

    #[test]
    fn decomposition_reassembles_central_gf() {
        let d = decompose_central_gf();
        let s = 0.1;
        let rebuilt =
            d.analytic_part.eval(s) + d.singular_coefficient.eval(s) / (1.0 - 4.0 * s).sqrt();
        let closed = eval_c(Complex64::new(s, 0.0)).unwrap();
        assert!((rebuilt - closed.re).abs() < 1e-12);
        assert!(closed.im.abs() < 1e-15);
    }

    #[test]
    fn estimate_known_values() {
        let branch = [decompose_central_gf().singularity];
        let first = algebraic_estimate(&branch, 1).unwrap();
        assert!((first - 12.0 / PI.sqrt()).abs() < 1e-10);
        assert!((first - 6.77).abs() < 0.01);

        let tenth = algebraic_estimate(&branch, 10).unwrap();
        assert!((tenth - 561_237.0).abs() < 0.001 * 561_237.0);
    }

    #[test]
    fn simple_pole_estimate_is_geometric() {
        // ω = 1 makes the n-dependence collapse: Γ(1) = 1 and n^1/n = 1
        let pole = [AlgebraicSingularity::new(1.0 / 3.0, 1.0, 2.0).unwrap()];
        for n in [1u64, 5, 9] {
            let want = 2.0 * 3.0f64.powi(n as i32);
            let got = algebraic_estimate(&pole, n).unwrap();
            assert!((got - want).abs() < 1e-12 * want, "n = {n}");
        }
    }

    #[test]
    fn coarse_estimate_known_values() {
        assert!((coarse_estimate(1).unwrap() - 6.77).abs() < 0.01);
        assert!((coarse_estimate(5).unwrap() - 775.1).abs() < 0.1);
        let n15 = coarse_estimate(15).unwrap();
        assert!((n15 - 4.69246e8).abs() < 0.001 * 4.69246e8);
    }

    #[test]
    fn coarse_and_algebraic_agree() {
        let branch = [decompose_central_gf().singularity];
        for n in 1..=100u64 {
            let coarse = coarse_estimate(n).unwrap();
            let general = algebraic_estimate(&branch, n).unwrap();
            assert!(
                (coarse - general).abs() <= 1e-12 * coarse.abs(),
                "n = {n}: {coarse} vs {general}"
            );
        }
    }

    #[test]
    fn log_path_is_finite_far_past_overflow() {
        let branch = [decompose_central_gf().singularity];
        for n in [600u64, 1_000, 10_000] {
            assert_eq!(coarse_estimate(n).unwrap(), f64::INFINITY);
            let direct_ln = coarse_estimate_ln(n).unwrap();
            let (sign, general_ln) = algebraic_estimate_ln(&branch, n).unwrap();
            assert!(direct_ln.is_finite() && general_ln.is_finite());
            assert_eq!(sign, 1.0);
            assert!((direct_ln - general_ln).abs() < 1e-9);
        }
    }

    #[test]
    fn ratio_table_rows() {
        let rows = ratio_table(15).unwrap();
        assert_eq!(rows.len(), 15);

        let first = &rows[0];
        assert_eq!(first.exact, BigInt::from(2));
        assert!((first.estimate - 6.77).abs() < 0.01);
        assert!((first.ratio - 3.385).abs() < 0.01);

        let eighth = &rows[7];
        assert_eq!(eighth.exact, BigInt::from(25_040));
        assert!((eighth.estimate - 39_217.6).abs() < 0.001 * 39_217.6);
        assert!((eighth.ratio - 1.566).abs() < 0.001);

        for pair in rows.windows(2) {
            assert!(
                pair[1].ratio < pair[0].ratio,
                "ratio not decreasing at n = {}",
                pair[1].n
            );
        }
    }

    #[test]
    fn ratio_table_bounds() {
        assert_eq!(ratio_table(0), Err(AsymptoticsError::IndexZero));
        assert_eq!(
            ratio_table(MAX_RATIO_TABLE_N + 1),
            Err(AsymptoticsError::EstimateOverflow)
        );
    }

    #[test]
    fn estimate_rejects_n_zero() {
        let branch = [decompose_central_gf().singularity];
        assert_eq!(
            algebraic_estimate(&branch, 0),
            Err(AsymptoticsError::IndexZero)
        );
        assert_eq!(coarse_estimate(0), Err(AsymptoticsError::IndexZero));
    }

    #[test]
    fn removable_witness_holds() {
        assert!(removable_singularity_witness());
    }
}
