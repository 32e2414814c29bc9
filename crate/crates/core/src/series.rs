//! Truncated power series: a center, coefficients `a_0..=a_order`, and an
//! optional convergence-radius hint.
//!
//! All binary operations require identical centers and truncate the result to
//! the shorter operand (`min` of the orders): beyond that prefix a
//! coefficient would depend on data neither operand stores. Radius hints
//! combine as the minimum when both operands carry one and are dropped
//! otherwise; operations that genuinely shrink the domain (reciprocal,
//! composition) drop the hint because the result's radius cannot be certified
//! from a truncation.

use thiserror::Error;

use crate::scalar::{is_finite, ComplexScalar};
use crate::ZERO_THRESHOLD;

/// Errors produced by series constructors and operations.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum SeriesError {
    #[error("coefficient list must be non-empty")]
    EmptyCoefficients,
    #[error("non-finite coefficient at index {0}")]
    NonFiniteCoefficient(usize),
    #[error("center must be finite")]
    NonFiniteCenter,
    #[error("scalar input must be finite")]
    NonFiniteInput,
    #[error("radius hint must be positive, got {0}")]
    InvalidRadiusHint(f64),
    #[error("operands are centered at different points")]
    CenterMismatch,
    #[error("constant term is below the zero threshold; division at the center")]
    DivisionAtCenter,
    #[error("target center lies outside the hinted disk: |w - center| = {distance}, hint = {hint}")]
    OutsideHintedDisk { distance: f64, hint: f64 },
    #[error("every coefficient is below the zero threshold")]
    NullSeries,
    #[error("constant term exceeds the zero threshold; the series has no zero at its center")]
    NoZeroAtCenter,
    #[error("tail window must lie in 1..={len}, got {window}")]
    InvalidTailWindow { window: usize, len: usize },
    #[error("annulus radii must satisfy 0 <= inner < outer, got ({inner}, {outer})")]
    InvalidAnnulus { inner: f64, outer: f64 },
    #[error("|z| = {modulus} lies outside the annulus ({inner}, {outer})")]
    OutsideAnnulus { modulus: f64, inner: f64, outer: f64 },
}

/// Root-test estimate of a convergence radius.
///
/// `value` is `1 / max |a_n|^(1/n)` over the inspected tail window, with
/// sub-threshold coefficients skipped; `+inf` when the whole window is below
/// the zero threshold.
#[derive(Debug, Clone, PartialEq)]
pub struct RadiusEstimate {
    pub value: f64,
    pub tail_window: usize,
}

/// Factorization `f = (z - center)^order_k * cofactor` with
/// `cofactor(center) != 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroFactorization {
    pub order_k: usize,
    pub cofactor: TruncatedSeries,
}

/// A power series about `center`, stored through degree `order` inclusive.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    center: ComplexScalar,
    coeffs: Vec<ComplexScalar>,
    radius_hint: Option<f64>,
}

impl TruncatedSeries {
    /// Builds a series about `center` with coefficients `a_0..=a_order`.
    pub fn new(center: ComplexScalar, coeffs: Vec<ComplexScalar>) -> Result<Self, SeriesError> {
        if !is_finite(center) {
            return Err(SeriesError::NonFiniteCenter);
        }
        if coeffs.is_empty() {
            return Err(SeriesError::EmptyCoefficients);
        }
        if let Some(bad) = coeffs.iter().position(|c| !is_finite(*c)) {
            return Err(SeriesError::NonFiniteCoefficient(bad));
        }
        Ok(Self { center, coeffs, radius_hint: None })
    }

    /// Attaches a convergence-radius hint (`> 0`, `+inf` allowed for entire
    /// functions). The hint is advisory: evaluation outside it is permitted,
    /// but recentering and composition refuse to cross it.
    pub fn with_radius_hint(mut self, hint: f64) -> Result<Self, SeriesError> {
        if hint.is_nan() || hint <= 0.0 {
            return Err(SeriesError::InvalidRadiusHint(hint));
        }
        self.radius_hint = Some(hint);
        Ok(self)
    }

    /// A polynomial: center 0, infinite radius hint.
    pub fn polynomial(coeffs: Vec<ComplexScalar>) -> Result<Self, SeriesError> {
        Self::new(ComplexScalar::new(0.0, 0.0), coeffs)?.with_radius_hint(f64::INFINITY)
    }

    /// Polynomial with real coefficients; convenience for tests and corpora.
    pub fn polynomial_real(coeffs: &[f64]) -> Result<Self, SeriesError> {
        Self::polynomial(coeffs.iter().map(|&c| ComplexScalar::new(c, 0.0)).collect())
    }

    /// The constant series `value` truncated at `order`.
    pub fn constant(value: ComplexScalar, order: usize) -> Result<Self, SeriesError> {
        let mut coeffs = vec![ComplexScalar::new(0.0, 0.0); order + 1];
        coeffs[0] = value;
        Self::polynomial(coeffs)
    }

    /// `exp(z)` through `order`: coefficients `1/n!`.
    pub fn exp(order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut c = 1.0f64;
        for n in 0..=order {
            if n > 0 {
                c /= n as f64;
            }
            coeffs.push(ComplexScalar::new(c, 0.0));
        }
        Self { center: ComplexScalar::new(0.0, 0.0), coeffs, radius_hint: Some(f64::INFINITY) }
    }

    /// `sin(z)` through `order`.
    pub fn sin(order: usize) -> Self {
        let exp = Self::exp(order);
        let coeffs = (0..=order)
            .map(|n| match n % 4 {
                1 => exp.coeffs[n],
                3 => -exp.coeffs[n],
                _ => ComplexScalar::new(0.0, 0.0),
            })
            .collect();
        Self { center: ComplexScalar::new(0.0, 0.0), coeffs, radius_hint: Some(f64::INFINITY) }
    }

    /// `cos(z)` through `order`.
    pub fn cos(order: usize) -> Self {
        let exp = Self::exp(order);
        let coeffs = (0..=order)
            .map(|n| match n % 4 {
                0 => exp.coeffs[n],
                2 => -exp.coeffs[n],
                _ => ComplexScalar::new(0.0, 0.0),
            })
            .collect();
        Self { center: ComplexScalar::new(0.0, 0.0), coeffs, radius_hint: Some(f64::INFINITY) }
    }

    /// `1/(1-z)` through `order`: all coefficients 1, radius hint 1.
    pub fn geometric(order: usize) -> Self {
        Self {
            center: ComplexScalar::new(0.0, 0.0),
            coeffs: vec![ComplexScalar::new(1.0, 0.0); order + 1],
            radius_hint: Some(1.0),
        }
    }

    pub fn center(&self) -> ComplexScalar {
        self.center
    }

    /// Coefficients `a_0..=a_order` in index order.
    pub fn coeffs(&self) -> &[ComplexScalar] {
        &self.coeffs
    }

    /// Highest stored index.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn radius_hint(&self) -> Option<f64> {
        self.radius_hint
    }

    /// Coefficient `a_n`, zero beyond the stored order.
    pub fn coeff(&self, n: usize) -> ComplexScalar {
        self.coeffs.get(n).copied().unwrap_or(ComplexScalar::new(0.0, 0.0))
    }

    /// Largest index whose coefficient exceeds the zero threshold, or `None`
    /// for a numerically null series.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| c.norm() > ZERO_THRESHOLD)
    }

    /// `(index, coefficient)` pairs in ascending index order.
    pub fn indexed_coeffs(&self) -> impl Iterator<Item = (i64, ComplexScalar)> + '_ {
        self.coeffs.iter().enumerate().map(|(n, &c)| (n as i64, c))
    }

    fn merge_hints(a: Option<f64>, b: Option<f64>) -> Option<f64> {
        match (a, b) {
            (Some(x), Some(y)) => Some(x.min(y)),
            _ => None,
        }
    }

    fn require_same_center(&self, other: &Self) -> Result<(), SeriesError> {
        if self.center == other.center {
            Ok(())
        } else {
            Err(SeriesError::CenterMismatch)
        }
    }

    /// `lambda * f + mu * g`, truncated to the shorter operand.
    pub fn linear_combine(
        lambda: ComplexScalar,
        f: &Self,
        mu: ComplexScalar,
        g: &Self,
    ) -> Result<Self, SeriesError> {
        if !is_finite(lambda) || !is_finite(mu) {
            return Err(SeriesError::NonFiniteInput);
        }
        f.require_same_center(g)?;
        let len = f.coeffs.len().min(g.coeffs.len());
        let coeffs = (0..len).map(|n| lambda * f.coeffs[n] + mu * g.coeffs[n]).collect();
        Ok(Self {
            center: f.center,
            coeffs,
            radius_hint: Self::merge_hints(f.radius_hint, g.radius_hint),
        })
    }

    /// Convolution product `c_n = sum_{j=0..=n} a_j b_{n-j}`, truncated to the
    /// shorter operand.
    pub fn cauchy_product(&self, other: &Self) -> Result<Self, SeriesError> {
        self.require_same_center(other)?;
        let len = self.coeffs.len().min(other.coeffs.len());
        let coeffs = convolve_prefix(&self.coeffs, &other.coeffs, len);
        Ok(Self {
            center: self.center,
            coeffs,
            radius_hint: Self::merge_hints(self.radius_hint, other.radius_hint),
        })
    }

    /// Termwise derivative; one order shorter, except that an order-0 input
    /// yields the order-0 zero series.
    pub fn derivative(&self) -> Self {
        let coeffs = if self.coeffs.len() == 1 {
            vec![ComplexScalar::new(0.0, 0.0)]
        } else {
            (1..self.coeffs.len()).map(|n| self.coeffs[n] * (n as f64)).collect()
        };
        Self { center: self.center, coeffs, radius_hint: self.radius_hint }
    }

    /// Horner evaluation at `z`, highest coefficient first. The radius hint is
    /// advisory; callers are responsible for flagging non-finite results.
    pub fn evaluate(&self, z: ComplexScalar) -> ComplexScalar {
        let w = z - self.center;
        let mut acc = *self.coeffs.last().expect("coeffs are non-empty");
        for &c in self.coeffs.iter().rev().skip(1) {
            acc = acc * w + c;
        }
        acc
    }

    /// Root-test radius estimate over the last `tail_window` coefficients.
    ///
    /// Indices with `|a_n|` at or below the zero threshold carry no radius
    /// information and are skipped, as is index 0 (the constant term has
    /// exponent `1/0`). A window of skipped indices only gives `+inf`.
    pub fn radius_estimate(&self, tail_window: usize) -> Result<RadiusEstimate, SeriesError> {
        let len = self.coeffs.len();
        if tail_window == 0 || tail_window > len {
            return Err(SeriesError::InvalidTailWindow { window: tail_window, len });
        }
        let mut max_root: f64 = 0.0;
        for n in (len - tail_window)..len {
            if n == 0 || self.coeffs[n].norm() <= ZERO_THRESHOLD {
                continue;
            }
            max_root = max_root.max(self.coeffs[n].norm().powf(1.0 / n as f64));
        }
        let value = if max_root == 0.0 { f64::INFINITY } else { 1.0 / max_root };
        Ok(RadiusEstimate { value, tail_window })
    }

    /// Re-expands the series about `w`: `b_m = sum_{n=m..=N} a_n C(n,m)
    /// (w - center)^(n-m)`, order preserved.
    ///
    /// Implemented as a Taylor shift by synthetic division, which computes the
    /// same finite sums with only additions and multiplications and is exact
    /// whenever the inputs make the arithmetic exact (e.g. polynomials with
    /// dyadic data). With a radius hint present, `w` must lie strictly inside
    /// the hinted disk.
    pub fn recenter(&self, w: ComplexScalar) -> Result<Self, SeriesError> {
        if !is_finite(w) {
            return Err(SeriesError::NonFiniteInput);
        }
        let t = w - self.center;
        if let Some(hint) = self.radius_hint {
            if t.norm() >= hint {
                return Err(SeriesError::OutsideHintedDisk { distance: t.norm(), hint });
            }
        }
        let mut b = self.coeffs.clone();
        let len = b.len();
        for m in 0..len {
            for n in (m..len - 1).rev() {
                let carry = t * b[n + 1];
                b[n] += carry;
            }
        }
        Ok(Self { center: w, coeffs: b, radius_hint: self.radius_hint })
    }

    /// Multiplicative inverse through the stored order:
    /// `c_0 = 1/a_0`, `c_n = -(1/a_0) * sum_{j=1..=n} a_j c_{n-j}`.
    ///
    /// The hint is dropped: the reciprocal converges on some disk avoiding the
    /// zeros of `f`, which a truncation cannot certify.
    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let a0 = self.coeffs[0];
        if a0.norm() <= ZERO_THRESHOLD {
            return Err(SeriesError::DivisionAtCenter);
        }
        let inv_a0 = ComplexScalar::new(1.0, 0.0) / a0;
        let mut c = Vec::with_capacity(self.coeffs.len());
        c.push(inv_a0);
        for n in 1..self.coeffs.len() {
            let mut acc = ComplexScalar::new(0.0, 0.0);
            for j in 1..=n {
                acc += self.coeffs[j] * c[n - j];
            }
            c.push(-inv_a0 * acc);
        }
        Ok(Self { center: self.center, coeffs: c, radius_hint: None })
    }

    /// Composition `f(g(z))`, truncated to the shorter operand's order.
    ///
    /// `g`'s constant term must equal `f`'s center (within the zero
    /// threshold); otherwise `f` is first recentered there, which requires the
    /// constant term to lie strictly inside `f`'s hinted disk when a hint is
    /// present. The result is centered at `g`'s center.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        let b0 = inner.coeffs[0];
        let outer = if (b0 - self.center).norm() <= ZERO_THRESHOLD {
            self.clone()
        } else {
            self.recenter(b0)?
        };
        let len = self.coeffs.len().min(inner.coeffs.len());
        // h = inner - b0 has an exactly zero constant term, so h^n has
        // valuation >= n and the prefix below `len` is fully determined.
        let mut h: Vec<ComplexScalar> = inner.coeffs[..len].to_vec();
        h[0] = ComplexScalar::new(0.0, 0.0);
        let mut acc = vec![ComplexScalar::new(0.0, 0.0); len];
        acc[0] = outer.coeffs[len - 1];
        for n in (0..len - 1).rev() {
            acc = convolve_prefix(&acc, &h, len);
            acc[0] += outer.coeffs[n];
        }
        Ok(Self { center: inner.center, coeffs: acc, radius_hint: None })
    }

    /// The binomial series `(1+z)^(1/p)` through `order`:
    /// coefficients `C(1/p, n)`, radius hint 1.
    pub fn binomial_root(p: u32, order: usize) -> Self {
        assert!(p >= 1, "root index must be at least 1");
        let alpha = 1.0 / f64::from(p);
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut c = ComplexScalar::new(1.0, 0.0);
        coeffs.push(c);
        for n in 1..=order {
            c = c * ComplexScalar::new((alpha - (n as f64 - 1.0)) / n as f64, 0.0);
            coeffs.push(c);
        }
        Self { center: ComplexScalar::new(0.0, 0.0), coeffs, radius_hint: Some(1.0) }
    }

    /// Splits off the zero at the center: `f = (z - center)^k * cofactor`
    /// with `|cofactor(center)| > ZERO_THRESHOLD`.
    ///
    /// Requires `|a_0|` at or below the zero threshold. `k` is the first index
    /// whose coefficient exceeds the threshold; the cofactor keeps the
    /// coefficients `a_k..=a_N` bit-identically, so shifting them back up
    /// reconstructs `f` exactly (with sub-threshold noise below `k` zeroed).
    pub fn zero_factorization(&self) -> Result<ZeroFactorization, SeriesError> {
        if self.coeffs[0].norm() > ZERO_THRESHOLD {
            return Err(SeriesError::NoZeroAtCenter);
        }
        let order_k = self
            .coeffs
            .iter()
            .position(|c| c.norm() > ZERO_THRESHOLD)
            .ok_or(SeriesError::NullSeries)?;
        let cofactor = Self {
            center: self.center,
            coeffs: self.coeffs[order_k..].to_vec(),
            radius_hint: self.radius_hint,
        };
        Ok(ZeroFactorization { order_k, cofactor })
    }
}

/// First `len` coefficients of the convolution of `a` and `b` (missing
/// entries read as zero). Inner sums run in ascending `j`.
pub(crate) fn convolve_prefix(
    a: &[ComplexScalar],
    b: &[ComplexScalar],
    len: usize,
) -> Vec<ComplexScalar> {
    let mut out = vec![ComplexScalar::new(0.0, 0.0); len];
    for (n, slot) in out.iter_mut().enumerate() {
        let mut acc = ComplexScalar::new(0.0, 0.0);
        for j in 0..=n {
            if j < a.len() && n - j < b.len() {
                acc += a[j] * b[n - j];
            }
        }
        *slot = acc;
    }
    out
}

/// Raises `base` to the `m`-th power under prefix-`len` truncation by
/// repeated convolution; `m = 0` gives the unit series.
pub(crate) fn power_prefix(base: &[ComplexScalar], m: usize, len: usize) -> Vec<ComplexScalar> {
    let mut out = vec![ComplexScalar::new(0.0, 0.0); len];
    out[0] = ComplexScalar::new(1.0, 0.0);
    for _ in 0..m {
        out = convolve_prefix(&out, base, len);
    }
    out
}
