//! The `2n`-point root-of-unity grid `omega^k`, `omega = exp(i*pi/n)`, and
//! the averaging operators built on it: polygonal mean values, discrete
//! derivative formulas, alternating coefficient extraction, circle power
//! sums and sampled circle extrema.
//!
//! Nodes are computed from their angles (`k*pi/n`), never by repeated
//! multiplication, so accuracy is uniform in `k`. Exponent arithmetic
//! reduces modulo `2n` before any lookup, which keeps the periodicity
//! `omega^(2n) = 1` exact.

use thiserror::Error;

use crate::scalar::{is_finite, ComplexScalar};
use crate::series::TruncatedSeries;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum UnityError {
    #[error("grid order n must be at least 1")]
    ZeroGridOrder,
    #[error("z = 0 makes the node denominators singular")]
    SingularNode,
    #[error("non-finite sample at angle {angle}")]
    NonFiniteSample { angle: f64 },
    #[error("sample count must be at least 1")]
    TooFewSamples,
    #[error("radius must be positive and finite, got {0}")]
    InvalidRadius(f64),
}

/// The `2n` roots of `z^(2n) = 1`, anchored at `omega = exp(i*pi/n)`, so that
/// `omega^n = -1` and the even powers are the classical `n`-th roots of unity.
#[derive(Debug, Clone, PartialEq)]
pub struct UnityGrid {
    n: usize,
    nodes: Vec<ComplexScalar>,
}

impl UnityGrid {
    pub fn new(n: usize) -> Result<Self, UnityError> {
        if n == 0 {
            return Err(UnityError::ZeroGridOrder);
        }
        let nodes = (0..2 * n)
            .map(|k| ComplexScalar::from_polar(1.0, k as f64 * std::f64::consts::PI / n as f64))
            .collect();
        Ok(Self { n, nodes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `omega = exp(i*pi/n)`, the grid generator.
    pub fn omega(&self) -> ComplexScalar {
        self.nodes[1 % self.nodes.len()]
    }

    /// All `2n` nodes, `nodes[k] = omega^k`.
    pub fn nodes(&self) -> &[ComplexScalar] {
        &self.nodes
    }

    /// `omega^e` for any integer exponent, via reduction modulo `2n`; exact
    /// periodicity by construction.
    pub fn node_power(&self, e: i64) -> ComplexScalar {
        let m = 2 * self.n as i128;
        let idx = (e as i128).rem_euclid(m) as usize;
        self.nodes[idx]
    }

    /// `sum_k nodes[k]^j` over all `2n` nodes, in index order.
    ///
    /// Equals `2n` exactly when `2n` divides `j` and vanishes (to rounding)
    /// otherwise: the terms are a geometric progression of roots of unity.
    pub fn power_sum(&self, j: i64) -> ComplexScalar {
        let mut acc = ComplexScalar::new(0.0, 0.0);
        for k in 0..2 * self.n as i64 {
            acc += self.node_power(k * j);
        }
        acc
    }
}

/// Result of a polygonal mean-value check: the vertex average, its distance
/// from the center value, and whether `n` actually covered the degree (the
/// identity is only guaranteed for `n >= deg P`).
#[derive(Debug, Clone, PartialEq)]
pub struct PolygonalMean {
    pub mean: ComplexScalar,
    pub residual: f64,
    pub n_covers_degree: bool,
}

/// Averages `P` over the `2n` vertices `z0 + z*omega^k`.
///
/// For a polynomial of degree `<= n` the average equals `P(z0)` for every
/// `z`; when `n` is too small the result is still computed but flagged.
pub fn polygonal_mean_value(
    p: &TruncatedSeries,
    z0: ComplexScalar,
    z: ComplexScalar,
    n: usize,
) -> Result<PolygonalMean, UnityError> {
    let grid = UnityGrid::new(n)?;
    let mut acc = ComplexScalar::new(0.0, 0.0);
    for &node in grid.nodes() {
        acc += p.evaluate(z0 + z * node);
    }
    let mean = acc / (2.0 * n as f64);
    let residual = (mean - p.evaluate(z0)).norm();
    Ok(PolygonalMean { mean, residual, n_covers_degree: n >= p.degree().unwrap_or(0) })
}

/// Discrete derivative formula: `(1/2n) * sum_k P(zeta_k) / (zeta_k - z0)^j`
/// with `zeta_k = z0 + z*omega^k`, which equals `P^(j)(z0) / j!` for
/// polynomials of degree `<= n` when `j <= n`.
///
/// The denominators are expanded as `z^j * omega^(k*j)`, so the node powers
/// stay exact and only one division by `z^j` happens at the end.
pub fn discrete_cauchy_derivative(
    p: &TruncatedSeries,
    z0: ComplexScalar,
    z: ComplexScalar,
    j: usize,
    n: usize,
) -> Result<ComplexScalar, UnityError> {
    let grid = UnityGrid::new(n)?;
    if z.norm() == 0.0 {
        return Err(UnityError::SingularNode);
    }
    let mut acc = ComplexScalar::new(0.0, 0.0);
    for (k, &node) in grid.nodes().iter().enumerate() {
        let sample = p.evaluate(z0 + z * node);
        acc += sample * grid.node_power(-((k * j) as i64));
    }
    Ok(acc / (2.0 * n as f64 * z.powu(j as u32)))
}

/// Alternating-sign extraction of the `target_n`-th coefficient of `f` about
/// 0: `[sum_k (-1)^k f(z*omega^k)] / (2n * z^n)` with `omega = exp(i*pi/n)`.
///
/// The alternating sum annihilates every coefficient index except
/// `n, 3n, 5n, ...`, so the result is `a_n + a_{3n} z^{2n} + ...`: an
/// `O(|z|^{2n})`-accurate estimate of `a_n`.
pub fn alternating_coefficient_extract<F>(
    f: F,
    target_n: usize,
    z: ComplexScalar,
) -> Result<ComplexScalar, UnityError>
where
    F: Fn(ComplexScalar) -> ComplexScalar,
{
    let grid = UnityGrid::new(target_n)?;
    if z.norm() == 0.0 {
        return Err(UnityError::SingularNode);
    }
    let mut acc = ComplexScalar::new(0.0, 0.0);
    for (k, &node) in grid.nodes().iter().enumerate() {
        let sample = f(z * node);
        if !is_finite(sample) {
            return Err(UnityError::NonFiniteSample {
                angle: k as f64 * std::f64::consts::PI / target_n as f64,
            });
        }
        if k % 2 == 0 {
            acc += sample;
        } else {
            acc -= sample;
        }
    }
    Ok(acc / (2.0 * target_n as f64 * z.powu(target_n as u32)))
}

/// Both sides of the circle power-sum identity for polynomials:
/// `sum_k |P(z*omega^k)|^2` and `2n * sum_j |a_j|^2 |z|^(2j)`.
///
/// They agree whenever `n >= deg P`; callers compare at their tolerance.
pub fn gutzmer_identity_sum(
    p: &TruncatedSeries,
    z: ComplexScalar,
    n: usize,
) -> Result<(f64, f64), UnityError> {
    let grid = UnityGrid::new(n)?;
    let mut lhs = 0.0;
    for &node in grid.nodes() {
        lhs += p.evaluate(z * node).norm_sqr();
    }
    let rhs = 2.0 * n as f64 * coefficient_power_sum(p.indexed_coeffs(), z.norm());
    Ok((lhs, rhs))
}

/// Sampled modulus extrema of `f` on the circle `|z| = r`.
#[derive(Debug, Clone, PartialEq)]
pub struct CircleExtrema {
    pub radius: f64,
    pub samples: usize,
    pub min_modulus: f64,
    pub max_modulus: f64,
    /// Grid point attaining the minimum (lowest index on ties).
    pub argmin: ComplexScalar,
    /// Grid point attaining the maximum (lowest index on ties).
    pub argmax: ComplexScalar,
}

/// Scans `|f|` over the uniform grid `r * exp(2*pi*i*s/samples)`,
/// `s = 0..samples`, reducing sequentially in index order.
pub fn circle_extrema<F>(f: F, r: f64, samples: usize) -> Result<CircleExtrema, UnityError>
where
    F: Fn(ComplexScalar) -> ComplexScalar,
{
    if samples == 0 {
        return Err(UnityError::TooFewSamples);
    }
    if !(r > 0.0) || !r.is_finite() {
        return Err(UnityError::InvalidRadius(r));
    }
    let mut min_modulus = f64::INFINITY;
    let mut max_modulus = f64::NEG_INFINITY;
    let mut argmin = ComplexScalar::new(0.0, 0.0);
    let mut argmax = ComplexScalar::new(0.0, 0.0);
    for s in 0..samples {
        let theta = (s as f64) * std::f64::consts::TAU / (samples as f64);
        let z = ComplexScalar::from_polar(r, theta);
        let v = f(z).norm();
        if !v.is_finite() {
            return Err(UnityError::NonFiniteSample { angle: theta });
        }
        if v < min_modulus {
            min_modulus = v;
            argmin = z;
        }
        if v > max_modulus {
            max_modulus = v;
            argmax = z;
        }
    }
    Ok(CircleExtrema { radius: r, samples, min_modulus, max_modulus, argmin, argmax })
}

/// `sum |a_j|^2 r^(2j)` over the given `(index, coefficient)` pairs, which
/// may include negative indices; summed in the order supplied (callers pass
/// ascending index order for determinism).
pub fn coefficient_power_sum<I>(coeffs: I, r: f64) -> f64
where
    I: IntoIterator<Item = (i64, ComplexScalar)>,
{
    let mut acc = 0.0;
    for (j, a) in coeffs {
        acc += a.norm_sqr() * r.powi(2 * j as i32);
    }
    acc
}
