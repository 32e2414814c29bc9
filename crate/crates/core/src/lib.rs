//! Truncated complex series algebra with exact roots-of-unity averaging and
//! numerical verifiers for the classical inequalities those tools support.
//!
//! The crate is organized in four layers:
//!
//! * [`series`]: arithmetic on truncated power series ([`TruncatedSeries`])
//!   and Laurent series ([`LaurentSeries`]): products, composition,
//!   reciprocals, recentering, fractional binomial roots, zero factorization
//!   and root-test radius estimates.
//! * [`unity`]: the `2n`-point grid of the roots of `z^(2n) = 1` built from
//!   `omega = exp(i*pi/n)` ([`unity::UnityGrid`]), with the averaging
//!   operators it supports: polygonal mean values, discrete derivative
//!   formulas, alternating coefficient extraction and circle power sums.
//! * [`structure`]: structural facts recovered from coefficients: certified
//!   injectivity radii, the local `a0 + (phi(w))^m` representation, and
//!   termwise-differentiated series families.
//! * [`verify`]: numerical checkers that turn the identities and
//!   inequalities above into pass/fail/inconclusive [`verify::CheckResult`]s
//!   with signed residuals and witnesses.
//!
//! Everything is deterministic: reductions run in index order, sampling grids
//! are derived from explicit counts, and the only randomness (target sampling
//! in the open-image verifier) flows from a caller-provided seed.

pub mod laurent;
pub mod scalar;
pub mod series;
pub mod structure;
pub mod unity;
pub mod verify;

pub use laurent::LaurentSeries;
pub use scalar::ComplexScalar;
pub use series::{RadiusEstimate, SeriesError, TruncatedSeries, ZeroFactorization};
pub use structure::{LocalRepresentation, SeriesFamily, StructureError};
pub use verify::{CheckResult, Report, Tolerances, Verdict, VerifyError, Witness};

/// Absolute threshold below which a coefficient or sample is treated as zero.
///
/// Used by coefficient-is-zero decisions: zero factorization, radius
/// estimates, degree detection and the divisibility guards of reciprocal and
/// composition.
pub const ZERO_THRESHOLD: f64 = 1e-12;
