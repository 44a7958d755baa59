//! Numeric verification of the residue route to the central diagonal.
//!
//! The diagonal of G(z, w) is the constant Laurent coefficient of
//! G(z, s/z), i.e. a contour integral of F(z) = G(z, s/z)/z. For small s
//! that integral picks up exactly three simple poles of F — the ones that
//! collapse to the origin as s → 0 — and the sum of their residues must
//! equal the closed form C(s). This module evaluates all of those objects
//! in double-precision complex arithmetic and checks the identity.
//!
//! In cleared-denominator form (used everywhere here, so s/z never
//! actually divides):
//!
//! ```text
//! F(z) = z (z - s - z² + zs - zs²) / ((1 - z - z²)(z - s - z²)(z² - zs - s²))
//! ```
//!
//! The s-dependent poles and their residues in closed form:
//!
//! ```text
//! z1 = (1 - √(1-4s))/2        Res1 = s(1-s) / (√(1-4s) (s² + 4s - 1))
//! z2 = (1 + √5)s/2            Res2 = -2 / (√5 ((3 + √5)s - √5 + 1))
//! z3 = (1 - √5)s/2            Res3 = 2 / ((3√5 - 5)s + √5 + 5)
//! ```
//!
//! The fixed poles of 1 - z - z² at (±√5 - 1)/2 do not move with s and are
//! deliberately not part of [`poles`].

use num_complex::Complex64;
use std::fmt;

/// Any denominator factor smaller than this in modulus counts as "on a
/// pole" and is rejected rather than evaluated.
pub const FACTOR_EPS: f64 = 1e-12;
/// Minimum pairwise distance between the three poles of a valid [`PoleSet`].
pub const POLE_COLLISION_EPS: f64 = 1e-10;
/// Absolute tolerance on |Res1 + Res2 + Res3 - C(s)|.
pub const IDENTITY_TOLERANCE: f64 = 1e-10;
/// Relative tolerance on closed-form vs. limit-extracted residues.
pub const NUMERIC_RESIDUE_TOLERANCE: f64 = 1e-7;
/// Offset radius for the directional residue limits.
pub const RESIDUE_LIMIT_RADIUS: f64 = 1e-6;
/// The identity is checked on the disk |s| ≤ this radius.
pub const SAMPLE_DISK_RADIUS: f64 = 0.2;
/// Sampled points keep this distance from 0, √5 - 2, and 1/4.
pub const SAMPLE_EXCLUSION_RADIUS: f64 = 1e-3;
/// Fixed seed for the reproducible verification sample set.
pub const RESIDUE_SAMPLE_SEED: u64 = 74829;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnalysisError {
    /// A denominator factor is within [`FACTOR_EPS`] of zero.
    PoleProximity,
    /// s is on (or too close to) a singular parameter: a root of
    /// s² + 4s - 1 or the branch point s = 1/4.
    SingularParameter,
    /// Two of the three tracked poles coincide.
    DegeneratePoleConfiguration,
    /// s is outside the disk on which the identity is checked.
    OutsideValidRegion,
}

impl fmt::Display for AnalysisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnalysisError::PoleProximity => write!(f, "pole proximity"),
            AnalysisError::SingularParameter => write!(f, "singular parameter"),
            AnalysisError::DegeneratePoleConfiguration => {
                write!(f, "degenerate pole configuration")
            }
            AnalysisError::OutsideValidRegion => write!(f, "outside valid region"),
        }
    }
}

impl std::error::Error for AnalysisError {}

/// The three s-dependent poles of F(z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleSet {
    pub z1: Complex64,
    pub z2: Complex64,
    pub z3: Complex64,
}

impl PoleSet {
    pub fn as_array(&self) -> [Complex64; 3] {
        [self.z1, self.z2, self.z3]
    }
}

/// Report of one residue-identity evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityReport {
    pub residue_sum: Complex64,
    pub closed_form: Complex64,
    pub max_abs_error: f64,
    pub passed: bool,
}

fn sqrt5() -> f64 {
    5.0f64.sqrt()
}

/// NaN and infinity are error states, never results.
fn finite(value: Complex64, error: AnalysisError) -> Result<Complex64, AnalysisError> {
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(error)
    }
}

/// G(z, w) as a rational function value.
pub fn eval_g(z: Complex64, w: Complex64) -> Result<Complex64, AnalysisError> {
    let d1 = 1.0 - z - z * z;
    let d2 = 1.0 - w - w * w;
    let d3 = 1.0 - z - w;
    if d1.norm() < FACTOR_EPS || d2.norm() < FACTOR_EPS || d3.norm() < FACTOR_EPS {
        return Err(AnalysisError::PoleProximity);
    }
    let numerator = 1.0 - z - w + z * w - z * z * w * w;
    finite(numerator / (d1 * d2 * d3), AnalysisError::PoleProximity)
}

/// F(z) = G(z, s/z)/z via the cleared-denominator form, which avoids the
/// cancellation error of actually forming s/z.
pub fn eval_f(z: Complex64, s: Complex64) -> Result<Complex64, AnalysisError> {
    if z.norm() < FACTOR_EPS {
        return Err(AnalysisError::PoleProximity);
    }
    let q1 = 1.0 - z - z * z;
    let q2 = z - s - z * z;
    let q3 = z * z - z * s - s * s;
    if q1.norm() < FACTOR_EPS || q2.norm() < FACTOR_EPS || q3.norm() < FACTOR_EPS {
        return Err(AnalysisError::PoleProximity);
    }
    let numerator = z * (z - s - z * z + z * s - z * s * s);
    finite(numerator / (q1 * q2 * q3), AnalysisError::PoleProximity)
}

/// The three small poles of F for a given s, principal branch of √(1-4s).
pub fn poles(s: Complex64) -> Result<PoleSet, AnalysisError> {
    let root = (1.0 - 4.0 * s).sqrt();
    let set = PoleSet {
        z1: (1.0 - root) / 2.0,
        z2: (1.0 + sqrt5()) / 2.0 * s,
        z3: (1.0 - sqrt5()) / 2.0 * s,
    };
    let [z1, z2, z3] = set.as_array();
    if (z1 - z2).norm() <= POLE_COLLISION_EPS
        || (z1 - z3).norm() <= POLE_COLLISION_EPS
        || (z2 - z3).norm() <= POLE_COLLISION_EPS
    {
        return Err(AnalysisError::DegeneratePoleConfiguration);
    }
    Ok(set)
}

fn reject_singular_parameter(s: Complex64) -> Result<(), AnalysisError> {
    let quadratic = s * s + 4.0 * s - 1.0;
    if quadratic.norm() < FACTOR_EPS || (s - 0.25).norm() < FACTOR_EPS {
        return Err(AnalysisError::SingularParameter);
    }
    Ok(())
}

/// The closed-form residues of F at z1, z2, z3.
pub fn residues(s: Complex64) -> Result<[Complex64; 3], AnalysisError> {
    reject_singular_parameter(s)?;
    let root = (1.0 - 4.0 * s).sqrt();
    let r5 = sqrt5();
    let res1 = s * (1.0 - s) / (root * (s * s + 4.0 * s - 1.0));
    let res2 = -2.0 / (r5 * ((3.0 + r5) * s - r5 + 1.0));
    let res3 = 2.0 / ((3.0 * r5 - 5.0) * s + r5 + 5.0);
    Ok([res1, res2, res3])
}

/// Limit-extracted residue at a simple pole z0: the average of
/// (z - z0)·F(z) over four compass directions at radius
/// [`RESIDUE_LIMIT_RADIUS`]. The symmetric average cancels the error terms
/// through third order in the offset.
pub fn numeric_residue(z0: Complex64, s: Complex64) -> Result<Complex64, AnalysisError> {
    let directions = [
        Complex64::new(1.0, 0.0),
        Complex64::new(-1.0, 0.0),
        Complex64::new(0.0, 1.0),
        Complex64::new(0.0, -1.0),
    ];
    let mut acc = Complex64::new(0.0, 0.0);
    for d in directions {
        let offset = RESIDUE_LIMIT_RADIUS * d;
        acc += offset * eval_f(z0 + offset, s)?;
    }
    Ok(acc / 4.0)
}

/// Closed-form value of C(s), principal branch of √(1-4s).
pub fn eval_c(s: Complex64) -> Result<Complex64, AnalysisError> {
    reject_singular_parameter(s)?;
    let root = (1.0 - 4.0 * s).sqrt();
    finite(
        (s - 1.0) * (root - s) / ((s * s + 4.0 * s - 1.0) * root),
        AnalysisError::SingularParameter,
    )
}

/// Checks Res1 + Res2 + Res3 = C(s) at one parameter value.
pub fn residue_identity_check(s: Complex64) -> Result<IdentityReport, AnalysisError> {
    if s.norm() > SAMPLE_DISK_RADIUS + FACTOR_EPS {
        return Err(AnalysisError::OutsideValidRegion);
    }
    let residue_sum: Complex64 = residues(s)?.into_iter().sum();
    let closed_form = eval_c(s)?;
    let max_abs_error = (residue_sum - closed_form).norm();
    Ok(IdentityReport {
        residue_sum,
        closed_form,
        max_abs_error,
        passed: max_abs_error < IDENTITY_TOLERANCE,
    })
}

fn split_mix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn unit_f64(state: &mut u64) -> f64 {
    (split_mix64(state) >> 11) as f64 / (1u64 << 53) as f64
}

/// Deterministic sample of `count` points in the disk |s| ≤ 0.2, keeping
/// [`SAMPLE_EXCLUSION_RADIUS`] away from 0, √5 - 2, and the branch point,
/// and rejecting anything with a degenerate pole configuration.
pub fn sample_points(seed: u64, count: usize) -> Vec<Complex64> {
    let removable = Complex64::new(sqrt5() - 2.0, 0.0);
    let branch = Complex64::new(0.25, 0.0);
    let mut state = seed;
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let re = (unit_f64(&mut state) * 2.0 - 1.0) * SAMPLE_DISK_RADIUS;
        let im = (unit_f64(&mut state) * 2.0 - 1.0) * SAMPLE_DISK_RADIUS;
        let s = Complex64::new(re, im);
        if s.norm() > SAMPLE_DISK_RADIUS
            || s.norm() < SAMPLE_EXCLUSION_RADIUS
            || (s - removable).norm() < SAMPLE_EXCLUSION_RADIUS
            || (s - branch).norm() < SAMPLE_EXCLUSION_RADIUS
            || poles(s).is_err()
            || residues(s).is_err()
        {
            continue;
        }
        out.push(s);
    }
    out
}
