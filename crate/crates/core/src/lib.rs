//! Exact and asymptotic computation of Binomiacci numbers (OEIS
//! [A074829](https://oeis.org/A074829)).
//!
//! Binomiacci numbers follow Pascal's addition rule on a table whose
//! boundary rows are Fibonacci numbers. This crate computes them four
//! independent ways and cross-checks every route against the others:
//!
//! * [`sequence`] — big-integer dynamic programming straight from the
//!   recurrence; the ground truth everything else is tested against.
//! * [`series`] / [`bivariate`] — truncated formal power series over exact
//!   rationals: the per-row generating functions, the two-variable table
//!   generating function, and the closed form for the central diagonal.
//! * [`residues`] — floating-point complex verification that the diagonal
//!   closed form equals the sum of three residues of G(z, s/z)/z.
//! * [`asymptotics`] — the algebraic-singularity leading-term estimate
//!   3·4ⁿ/√(πn) for the central numbers, and its comparison table.
//!
//! [`verify`] packages the cross-checks into named pass/fail suites.

pub mod asymptotics;
pub mod bivariate;
pub mod residues;
pub mod sequence;
pub mod series;
pub mod verify;

pub use num_bigint::BigInt;
pub use num_complex::Complex64;
pub use num_rational::BigRational;
