//! Laurent series on an annulus: a finite principal part `a_{-1}..a_{-n}`
//! and a truncated regular part `a_0..a_m`.

use crate::scalar::{is_finite, ComplexScalar};
use crate::series::SeriesError;

/// Laurent series with stored coefficients `a_{-neg_len}..=a_{pos_len}` and a
/// validity annulus `inner < |z| < outer`.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentSeries {
    /// `neg_coeffs[m - 1]` holds `a_{-m}` for `m = 1..=neg_coeffs.len()`.
    neg_coeffs: Vec<ComplexScalar>,
    /// `pos_coeffs[n]` holds `a_n` for `n = 0..=pos_coeffs.len() - 1`.
    pos_coeffs: Vec<ComplexScalar>,
    annulus: (f64, f64),
}

impl LaurentSeries {
    /// Builds a Laurent series. `pos_coeffs` must be non-empty (store at
    /// least `a_0`); the annulus must satisfy `0 <= inner < outer` with
    /// `outer = +inf` allowed.
    pub fn new(
        neg_coeffs: Vec<ComplexScalar>,
        pos_coeffs: Vec<ComplexScalar>,
        annulus: (f64, f64),
    ) -> Result<Self, SeriesError> {
        if pos_coeffs.is_empty() {
            return Err(SeriesError::EmptyCoefficients);
        }
        if let Some(bad) = neg_coeffs.iter().position(|c| !is_finite(*c)) {
            return Err(SeriesError::NonFiniteCoefficient(bad));
        }
        if let Some(bad) = pos_coeffs.iter().position(|c| !is_finite(*c)) {
            return Err(SeriesError::NonFiniteCoefficient(bad));
        }
        let (inner, outer) = annulus;
        if inner.is_nan() || outer.is_nan() || inner < 0.0 || inner >= outer {
            return Err(SeriesError::InvalidAnnulus { inner, outer });
        }
        Ok(Self { neg_coeffs, pos_coeffs, annulus })
    }

    /// Principal-part coefficients: entry `m - 1` is `a_{-m}`.
    pub fn neg_coeffs(&self) -> &[ComplexScalar] {
        &self.neg_coeffs
    }

    /// Regular-part coefficients `a_0..`.
    pub fn pos_coeffs(&self) -> &[ComplexScalar] {
        &self.pos_coeffs
    }

    pub fn annulus(&self) -> (f64, f64) {
        self.annulus
    }

    /// Coefficient `a_j` for any integer `j`, zero outside the stored range.
    pub fn coeff(&self, j: i64) -> ComplexScalar {
        if j >= 0 {
            self.pos_coeffs.get(j as usize).copied().unwrap_or(ComplexScalar::new(0.0, 0.0))
        } else {
            let m = (-j) as usize;
            self.neg_coeffs.get(m - 1).copied().unwrap_or(ComplexScalar::new(0.0, 0.0))
        }
    }

    /// `(index, coefficient)` pairs in ascending index order, from the most
    /// negative stored index through the most positive.
    pub fn indexed_coeffs(&self) -> impl Iterator<Item = (i64, ComplexScalar)> + '_ {
        let n = self.neg_coeffs.len() as i64;
        (-n..0)
            .map(move |j| (j, self.neg_coeffs[(-j - 1) as usize]))
            .chain(self.pos_coeffs.iter().enumerate().map(|(i, &c)| (i as i64, c)))
    }

    /// Evaluates at `z`, which must lie strictly inside the annulus.
    ///
    /// Both halves use Horner evaluation (the principal part in `1/z`), and
    /// the principal part is summed first so the reduction order is fixed.
    pub fn evaluate(&self, z: ComplexScalar) -> Result<ComplexScalar, SeriesError> {
        let (inner, outer) = self.annulus;
        let r = z.norm();
        if !(r > inner && r < outer) {
            return Err(SeriesError::OutsideAnnulus { modulus: r, inner, outer });
        }
        let mut neg_sum = ComplexScalar::new(0.0, 0.0);
        if !self.neg_coeffs.is_empty() {
            let u = ComplexScalar::new(1.0, 0.0) / z;
            // Horner in u over a_{-n}..a_{-1}, then one more factor of u so
            // every term carries z^{-m}.
            let mut acc = *self.neg_coeffs.last().expect("non-empty");
            for &c in self.neg_coeffs.iter().rev().skip(1) {
                acc = acc * u + c;
            }
            neg_sum = acc * u;
        }
        let mut pos_sum = *self.pos_coeffs.last().expect("non-empty");
        for &c in self.pos_coeffs.iter().rev().skip(1) {
            pos_sum = pos_sum * z + c;
        }
        Ok(neg_sum + pos_sum)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexScalar {
        ComplexScalar::new(re, im)
    }

    #[test]
    fn construction_validates_annulus() {
        assert!(matches!(
            LaurentSeries::new(vec![], vec![c(1.0, 0.0)], (2.0, 1.0)),
            Err(SeriesError::InvalidAnnulus { .. })
        ));
        assert!(matches!(
            LaurentSeries::new(vec![], vec![c(1.0, 0.0)], (-1.0, 1.0)),
            Err(SeriesError::InvalidAnnulus { .. })
        ));
        assert!(LaurentSeries::new(vec![], vec![c(1.0, 0.0)], (0.0, f64::INFINITY)).is_ok());
        assert!(matches!(
            LaurentSeries::new(vec![], vec![], (0.0, 1.0)),
            Err(SeriesError::EmptyCoefficients)
        ));
    }

    #[test]
    fn evaluate_z_plus_inverse_z_at_i() {
        // z + 1/z vanishes at z = i.
        let l = LaurentSeries::new(
            vec![c(1.0, 0.0)],
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            (0.0, f64::INFINITY),
        )
        .unwrap();
        let v = l.evaluate(c(0.0, 1.0)).unwrap();
        assert!(v.norm() <= 1e-15);
    }

    #[test]
    fn evaluate_pure_principal_part() {
        // 1/z on |z| = 2 has modulus 1/2 everywhere.
        let l = LaurentSeries::new(vec![c(1.0, 0.0)], vec![c(0.0, 0.0)], (0.0, f64::INFINITY))
            .unwrap();
        for k in 0..8 {
            let theta = 2.0 * std::f64::consts::PI * f64::from(k) / 8.0;
            let z = ComplexScalar::from_polar(2.0, theta);
            let v = l.evaluate(z).unwrap();
            assert!((v.norm() - 0.5).abs() < 1e-14);
            // 1/z = conj(z)/|z|^2.
            assert!((v - z.conj() / 4.0).norm() < 1e-14);
        }
    }

    #[test]
    fn evaluate_outside_annulus_is_rejected() {
        let l = LaurentSeries::new(
            vec![c(1.0, 0.0)],
            vec![c(0.0, 0.0)],
            (0.5, 2.0),
        )
        .unwrap();
        assert!(matches!(
            l.evaluate(c(0.25, 0.0)),
            Err(SeriesError::OutsideAnnulus { .. })
        ));
        assert!(matches!(
            l.evaluate(c(2.0, 0.0)),
            Err(SeriesError::OutsideAnnulus { .. })
        ));
        assert!(l.evaluate(c(1.0, 0.0)).is_ok());
    }

    #[test]
    fn coeff_lookup_covers_both_sides() {
        let l = LaurentSeries::new(
            vec![c(-1.0, 0.0), c(-2.0, 0.0)],
            vec![c(3.0, 0.0), c(4.0, 0.0)],
            (0.0, f64::INFINITY),
        )
        .unwrap();
        assert_eq!(l.coeff(-2), c(-2.0, 0.0));
        assert_eq!(l.coeff(-1), c(-1.0, 0.0));
        assert_eq!(l.coeff(0), c(3.0, 0.0));
        assert_eq!(l.coeff(1), c(4.0, 0.0));
        assert_eq!(l.coeff(5), c(0.0, 0.0));
        assert_eq!(l.coeff(-5), c(0.0, 0.0));
        let idx: Vec<i64> = l.indexed_coeffs().map(|(j, _)| j).collect();
        assert_eq!(idx, vec![-2, -1, 0, 1]);
    }
}
