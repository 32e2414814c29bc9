//! Numerical certification of the library's inequalities and classification
//! statements. Every check returns a [`CheckResult`] carrying a signed slack
//! (`residual`), the tolerance it was judged against, and witness points.
//!
//! Checks are pure functions: identical inputs (including seeds) produce
//! identical results. Sampled verification of continuum statements cannot
//! fake certainty, so `inconclusive` is a first-class verdict used whenever
//! the grid evidence does not resolve a hypothesis.

use thiserror::Error;

use crate::scalar::{is_finite, ComplexScalar};
use crate::series::{SeriesError, TruncatedSeries};
use crate::structure::StructureError;
use crate::unity::UnityError;

mod bounds;
mod families;
mod landscape;
mod liouville;
mod schwarz;

pub use bounds::{
    verify_cauchy_bounds, verify_derivative_bound, verify_laurent_uniqueness, verify_parseval,
};
pub use families::verify_double_series;
pub use landscape::{
    classify_critical_point, verify_anti_calculus, verify_boundary_max, verify_open_image,
};
pub use liouville::{detect_polynomial_degree, extract_coefficient_estimates};
pub use schwarz::{clunie_jack, verify_schwarz};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VerifyError {
    #[error("radius must be positive and finite, got {0}")]
    InvalidRadius(f64),
    #[error("need at least {min} samples, got {got}")]
    TooFewSamples { min: usize, got: usize },
    #[error("radii must form a non-empty, strictly increasing, positive sequence")]
    BadRadii,
    #[error("extraction order {order} must exceed the claimed degree bound {claimed}")]
    OrderBelowClaim { order: usize, claimed: usize },
    #[error("inner radius {r} must stay below the outer radius {outer}")]
    RadiusOrder { r: f64, outer: f64 },
    #[error("growth parameters must be non-negative and finite")]
    BadGrowthParams,
    #[error("series must be centered at the origin")]
    CenterNotOrigin,
    #[error("constant term must vanish at the center")]
    ConstantTermNotZero,
    #[error("point must lie on the unit circle")]
    NotOnUnitCircle,
    #[error("|f| vanishes at the proposed boundary maximum")]
    DegenerateBoundaryValue,
    #[error("non-finite sample at z = {0}")]
    NonFiniteSample(ComplexScalar),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Unity(#[from] UnityError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

/// A `(point, value)` pair supporting a verdict. For coefficient-indexed
/// checks the point encodes the index as `(j, 0)`; the note attached to the
/// result says so.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witness {
    pub point: ComplexScalar,
    pub value: ComplexScalar,
}

impl Witness {
    pub fn new(point: ComplexScalar, value: ComplexScalar) -> Self {
        Self { point, value }
    }
}

/// One verifier outcome. For inequality checks the contract is
/// `verdict == Pass` iff `residual >= -tolerance`; `witnesses` is non-empty
/// whenever the verdict is `Fail`. `notes` carry human-readable context
/// (derivative sources, guard magnitudes, classifications) and are not part
/// of the serialized schema.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: String,
    pub verdict: Verdict,
    pub residual: f64,
    pub tolerance: f64,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
}

impl CheckResult {
    /// Builds a result whose verdict follows the slack contract.
    pub fn from_slack(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        let verdict = if residual >= -tolerance { Verdict::Pass } else { Verdict::Fail };
        Self { name: name.into(), verdict, residual, tolerance, witnesses: Vec::new(), notes: Vec::new() }
    }

    /// Builds an inconclusive result; the reason goes into the notes.
    pub fn inconclusive(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            verdict: Verdict::Inconclusive,
            residual: 0.0,
            tolerance: 0.0,
            witnesses: Vec::new(),
            notes: vec![reason.into()],
        }
    }

    pub fn with_witness(mut self, w: Witness) -> Self {
        self.witnesses.push(w);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

/// A configuration snapshot entry value; kept as plain data so reports can
/// be serialized faithfully by any front end.
#[derive(Debug, Clone, PartialEq)]
pub enum ConfigValue {
    Unsigned(u64),
    Real(f64),
    Text(String),
    RealList(Vec<f64>),
}

/// A suite run: the checks in declared order plus the exact inputs
/// (suite name, seed, config snapshot) that make the run reproducible.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub config: Vec<(String, ConfigValue)>,
    pub results: Vec<CheckResult>,
}

impl Report {
    /// `(pass, fail, inconclusive)` counts.
    pub fn summary(&self) -> (usize, usize, usize) {
        let mut counts = (0, 0, 0);
        for r in &self.results {
            match r.verdict {
                Verdict::Pass => counts.0 += 1,
                Verdict::Fail => counts.1 += 1,
                Verdict::Inconclusive => counts.2 += 1,
            }
        }
        counts
    }
}

/// Default check tolerances; any of them can be overridden by callers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Relative tolerance for exact algebraic identities.
    pub algebraic: f64,
    /// Relative tolerance for sampled inequalities.
    pub sampled: f64,
    /// Absolute threshold below which a value counts as zero.
    pub zero: f64,
    /// Factor multiplying the local `|f|` scale to decide whether a
    /// derivative is significantly nonzero.
    pub derivative_significance: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            algebraic: 1e-10,
            sampled: 1e-6,
            zero: crate::ZERO_THRESHOLD,
            derivative_significance: 1e-6,
        }
    }
}

/// A function whose derivative a check needs: either a series (symbolic
/// derivative) or a plain evaluation oracle (central differences with step
/// `1e-6 * max(1, |z|)`). The source used is recorded in the result notes.
pub enum DifferentiableSubject<'a> {
    Series(&'a TruncatedSeries),
    Sampled(&'a dyn Fn(ComplexScalar) -> ComplexScalar),
}

impl DifferentiableSubject<'_> {
    pub fn value(&self, z: ComplexScalar) -> ComplexScalar {
        match self {
            DifferentiableSubject::Series(s) => s.evaluate(z),
            DifferentiableSubject::Sampled(f) => f(z),
        }
    }

    pub fn derivative_at(&self, z: ComplexScalar) -> ComplexScalar {
        match self {
            DifferentiableSubject::Series(s) => s.derivative().evaluate(z),
            DifferentiableSubject::Sampled(f) => {
                let h = 1e-6 * z.norm().max(1.0);
                let step = ComplexScalar::new(h, 0.0);
                (f(z + step) - f(z - step)) / (2.0 * h)
            }
        }
    }

    pub fn derivative_note(&self) -> &'static str {
        match self {
            DifferentiableSubject::Series(_) => "derivative source: series coefficients",
            DifferentiableSubject::Sampled(_) => "derivative source: central differences",
        }
    }

    /// Relative tolerance appropriate to the derivative source: algebraic
    /// for symbolic derivatives, sampled for central differences (whose
    /// rounding floor is far above the algebraic tolerance).
    pub fn derivative_tolerance(&self, tol: &Tolerances) -> f64 {
        match self {
            DifferentiableSubject::Series(_) => tol.algebraic,
            DifferentiableSubject::Sampled(_) => tol.sampled,
        }
    }
}

/// Uniform circle node `r * exp(2*pi*i*s/samples)`, matching the grid
/// convention of `unity::circle_extrema`.
pub(crate) fn circle_node(r: f64, s: usize, samples: usize) -> ComplexScalar {
    let theta = (s as f64) * std::f64::consts::TAU / (samples as f64);
    ComplexScalar::from_polar(r, theta)
}

/// Samples `f` on the uniform circle grid, rejecting non-finite values.
pub(crate) fn sample_circle<F>(
    f: &F,
    r: f64,
    samples: usize,
) -> Result<Vec<(ComplexScalar, ComplexScalar)>, VerifyError>
where
    F: Fn(ComplexScalar) -> ComplexScalar,
{
    let mut out = Vec::with_capacity(samples);
    for s in 0..samples {
        let z = circle_node(r, s, samples);
        let v = f(z);
        if !is_finite(v) {
            return Err(VerifyError::NonFiniteSample(z));
        }
        out.push((z, v));
    }
    Ok(out)
}

pub(crate) fn check_radius(r: f64) -> Result<(), VerifyError> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(VerifyError::InvalidRadius(r));
    }
    Ok(())
}

pub(crate) fn check_samples(min: usize, got: usize) -> Result<(), VerifyError> {
    if got < min {
        return Err(VerifyError::TooFewSamples { min, got });
    }
    Ok(())
}

/// Accumulates per-item inequality slacks `value >= -tolerance` and keeps
/// the binding one (smallest slack-to-tolerance ratio). Reporting that pair
/// preserves the slack contract: the binding item passes iff all do.
pub(crate) struct BindingSlack {
    pub slack: f64,
    pub tolerance: f64,
    pub index: usize,
    ratio: f64,
    count: usize,
}

impl BindingSlack {
    pub fn new() -> Self {
        Self { slack: f64::INFINITY, tolerance: 0.0, index: 0, ratio: f64::INFINITY, count: 0 }
    }

    pub fn offer(&mut self, index: usize, slack: f64, tolerance: f64) {
        debug_assert!(tolerance > 0.0, "item tolerances must be positive");
        let ratio = slack / tolerance;
        if ratio < self.ratio {
            self.ratio = ratio;
            self.slack = slack;
            self.tolerance = tolerance;
            self.index = index;
        }
        self.count += 1;
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }
}
