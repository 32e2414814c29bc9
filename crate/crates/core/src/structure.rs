//! Structural facts recovered from coefficients: certified injectivity radii,
//! the local `a0 + phi(w)^m` normal form, and termwise differentiation of
//! series families with a two-route consistency check.

use thiserror::Error;

use crate::scalar::{principal_root, ComplexScalar};
use crate::series::{power_prefix, SeriesError, TruncatedSeries};
use crate::ZERO_THRESHOLD;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StructureError {
    #[error("|a_1| is below the zero threshold: the center is a critical point")]
    CriticalCenter,
    #[error("no coefficient beyond the constant term exceeds the zero threshold")]
    DegenerateConstant,
    #[error("family must contain at least one member")]
    EmptyFamily,
    #[error("family members must share center and order")]
    FamilyShapeMismatch,
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Largest grid-certified radius `r` with
/// `sum_{n>=2} n |a_n| r^(n-1) < |a_1| / 2`.
///
/// On any disk of that radius the difference quotients of `f` stay above
/// `|a_1|/2`, so `f` is injective there. The radius is located by bisection
/// to 1e-6 relative precision and always satisfies the defining inequality
/// strictly. With a radius hint present the result is capped at `hint/2`;
/// a series with a numerically zero tail makes the condition vacuous and
/// returns the cap directly (`+inf` without a finite hint).
pub fn injectivity_radius(f: &TruncatedSeries) -> Result<f64, StructureError> {
    let a1 = f.coeff(1).norm();
    if a1 <= ZERO_THRESHOLD {
        return Err(StructureError::CriticalCenter);
    }
    let target = a1 / 2.0;
    let tail = |r: f64| -> f64 {
        let mut acc = 0.0;
        for (n, c) in f.coeffs().iter().enumerate().skip(2) {
            acc += n as f64 * c.norm() * r.powi(n as i32 - 1);
        }
        acc
    };
    let cap = f.radius_hint().map(|h| h / 2.0).unwrap_or(f64::INFINITY);
    let tail_is_null = f.coeffs().iter().skip(2).all(|c| c.norm() <= ZERO_THRESHOLD);
    if tail_is_null {
        return Ok(cap);
    }
    // Bracket the crossing: T is continuous and strictly increasing where the
    // tail is non-null, with T(0) = 0 < target.
    let mut hi = if cap.is_finite() { cap } else { 1.0 };
    if cap.is_finite() && tail(cap) < target {
        return Ok(cap);
    }
    while tail(hi) < target {
        hi *= 2.0;
    }
    let mut lo = 0.0f64;
    while hi - lo > 1e-6 * hi {
        let mid = 0.5 * (lo + hi);
        if tail(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo.min(cap))
}

/// The normal form `f = a0 + phi(z - center)^m` near the center:
/// `phi(w) = a * w * (1 + G(w))` with `a^m = a_m` (principal root) and
/// `(1 + G)^m = 1 + g`, `g` the normalized tail of `f`.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalRepresentation {
    /// `f(center)`.
    pub constant: ComplexScalar,
    /// Multiplicity `m`: first index past 0 whose coefficient clears the
    /// zero threshold.
    pub multiplicity: usize,
    /// `phi` as a series in `w = z - center` about 0; `phi(0) = 0` exactly
    /// and `phi'(0) = a` with `|a| = |a_m|^(1/m) > 0`.
    pub phi: TruncatedSeries,
}

impl LocalRepresentation {
    /// Rebuilds `constant + phi^multiplicity` through `order` as a series in
    /// `w`; for a faithful representation this matches the original
    /// coefficients.
    pub fn reconstruct(&self, order: usize) -> TruncatedSeries {
        let mut coeffs = power_prefix(self.phi.coeffs(), self.multiplicity, order + 1);
        coeffs[0] += self.constant;
        TruncatedSeries::new(ComplexScalar::new(0.0, 0.0), coeffs)
            .expect("powers of finite series are finite")
    }
}

/// Computes the local representation of `f` about its center.
///
/// Writes `f - a0 = a_m w^m (1 + g(w))`, takes the principal `m`-th root
/// `a` of `a_m` (argument in `(-pi/m, pi/m]`) and the binomial-series root
/// `1 + G = (1 + g)^(1/m)`, and returns `phi(w) = a w (1 + G(w))` through
/// order `N - m + 1`.
pub fn local_representation(f: &TruncatedSeries) -> Result<LocalRepresentation, StructureError> {
    let coeffs = f.coeffs();
    let multiplicity = coeffs
        .iter()
        .skip(1)
        .position(|c| c.norm() > ZERO_THRESHOLD)
        .map(|p| p + 1)
        .ok_or(StructureError::DegenerateConstant)?;
    let a_m = coeffs[multiplicity];
    let tail_len = coeffs.len() - multiplicity; // 1 + deg of g
    let mut g = vec![ComplexScalar::new(0.0, 0.0); tail_len];
    for j in 1..tail_len {
        g[j] = coeffs[multiplicity + j] / a_m;
    }
    let g = TruncatedSeries::new(ComplexScalar::new(0.0, 0.0), g)?;
    let root = TruncatedSeries::binomial_root(multiplicity as u32, tail_len - 1);
    let one_plus_big_g = root.compose(&g)?;
    let a = principal_root(a_m, multiplicity as u32);
    let mut phi = Vec::with_capacity(tail_len + 1);
    phi.push(ComplexScalar::new(0.0, 0.0));
    for &c in one_plus_big_g.coeffs() {
        phi.push(a * c);
    }
    let phi = TruncatedSeries::new(ComplexScalar::new(0.0, 0.0), phi)?;
    Ok(LocalRepresentation { constant: coeffs[0], multiplicity, phi })
}

/// A finite family of series sharing center and order, eligible for
/// termwise summation and differentiation.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesFamily {
    members: Vec<TruncatedSeries>,
}

impl SeriesFamily {
    pub fn new(members: Vec<TruncatedSeries>) -> Result<Self, StructureError> {
        let first = members.first().ok_or(StructureError::EmptyFamily)?;
        let (center, order) = (first.center(), first.order());
        if members.iter().any(|m| m.center() != center || m.order() != order) {
            return Err(StructureError::FamilyShapeMismatch);
        }
        Ok(Self { members })
    }

    pub fn members(&self) -> &[TruncatedSeries] {
        &self.members
    }

    /// Coefficientwise sum in member order.
    fn sum(members: &[TruncatedSeries]) -> TruncatedSeries {
        let len = members[0].coeffs().len();
        let mut acc = vec![ComplexScalar::new(0.0, 0.0); len];
        for m in members {
            for (slot, &c) in acc.iter_mut().zip(m.coeffs()) {
                *slot += c;
            }
        }
        TruncatedSeries::new(members[0].center(), acc).expect("finite sums of finite series")
    }
}

/// The `k`-th derivative of a family sum, with the two computation routes
/// compared coefficientwise.
#[derive(Debug, Clone, PartialEq)]
pub struct DoubleSeriesSum {
    /// Differentiate-the-sum route (the canonical result).
    pub series: TruncatedSeries,
    /// Max coefficient gap between the two routes, relative to the largest
    /// coefficient either route produced; 0 when both vanish identically.
    pub route_discrepancy: f64,
}

/// Sums the family and differentiates `k` times, and also differentiates
/// each member `k` times before summing; both are finite rearrangements of
/// the same numbers, so their discrepancy is a pure rounding diagnostic.
pub fn double_series_sum(family: &SeriesFamily, k: usize) -> DoubleSeriesSum {
    let mut sum_first = SeriesFamily::sum(&family.members);
    for _ in 0..k {
        sum_first = sum_first.derivative();
    }
    let derived: Vec<TruncatedSeries> = family
        .members
        .iter()
        .map(|m| {
            let mut d = m.clone();
            for _ in 0..k {
                d = d.derivative();
            }
            d
        })
        .collect();
    let derive_first = SeriesFamily::sum(&derived);
    let mut gap: f64 = 0.0;
    let mut scale: f64 = 0.0;
    for (a, b) in sum_first.coeffs().iter().zip(derive_first.coeffs()) {
        gap = gap.max((a - b).norm());
        scale = scale.max(a.norm()).max(b.norm());
    }
    let route_discrepancy = if gap == 0.0 { 0.0 } else { gap / scale };
    DoubleSeriesSum { series: sum_first, route_discrepancy }
}
