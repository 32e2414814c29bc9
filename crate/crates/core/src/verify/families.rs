//! Termwise-operation check for series families: differentiating the sum
//! must agree with summing the derivatives, both as coefficients (a finite
//! rearrangement) and as sampled evaluations.

use crate::scalar::ComplexScalar;
use crate::series::TruncatedSeries;
use crate::structure::{double_series_sum, SeriesFamily};

use super::{check_radius, circle_node, CheckResult, Tolerances, VerifyError, Witness};

/// Compares `(sum of the family)^(k)` against `sum of the k-th derivatives`
/// at sampled points `|z - center| <= r`, demanding agreement within the
/// algebraic tolerance relative to the local value scale. The coefficient
/// route discrepancy from the termwise sum is recorded in the notes.
pub fn verify_double_series(
    family: &SeriesFamily,
    r: f64,
    k: usize,
    tol: &Tolerances,
) -> Result<CheckResult, VerifyError> {
    check_radius(r)?;
    let members = family.members();
    for m in members {
        if let Some(hint) = m.radius_hint() {
            if r >= hint {
                return Err(VerifyError::RadiusOrder { r, outer: hint });
            }
        }
    }

    let combined = double_series_sum(family, k);
    let derived: Vec<TruncatedSeries> = members
        .iter()
        .map(|m| {
            let mut d = m.clone();
            for _ in 0..k {
                d = d.derivative();
            }
            d
        })
        .collect();

    let center = members[0].center();
    let mut worst_rel = 0.0f64;
    let mut worst_z = center;
    let mut worst_lhs = combined.series.evaluate(center);
    let mut check_point = |z: ComplexScalar| {
        let lhs = combined.series.evaluate(z);
        let rhs = derived
            .iter()
            .fold(ComplexScalar::new(0.0, 0.0), |acc, d| acc + d.evaluate(z));
        let rel = (lhs - rhs).norm() / 1.0f64.max(lhs.norm()).max(rhs.norm());
        if rel > worst_rel {
            worst_rel = rel;
            worst_z = z;
            worst_lhs = lhs;
        }
    };
    check_point(center);
    for ring in 1..=4 {
        let rho = r * ring as f64 / 4.0;
        for s in 0..16 {
            check_point(center + circle_node(rho, s, 16));
        }
    }

    Ok(CheckResult::from_slack("double_series", -worst_rel, tol.algebraic)
        .with_witness(Witness::new(worst_z, worst_lhs))
        .with_note(format!(
            "coefficient route discrepancy {:.3e} (differentiate-then-sum vs sum-then-differentiate)",
            combined.route_discrepancy
        )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Verdict;

    fn c(re: f64, im: f64) -> ComplexScalar {
        ComplexScalar::new(re, im)
    }

    #[test]
    fn exp_slices_sum_to_exp() {
        let order = 12;
        let exp = TruncatedSeries::exp(order);
        let members: Vec<TruncatedSeries> = (0..=order)
            .map(|mu| {
                let mut coeffs = vec![c(0.0, 0.0); order + 1];
                coeffs[mu] = exp.coeffs()[mu];
                TruncatedSeries::new(c(0.0, 0.0), coeffs).unwrap()
            })
            .collect();
        let family = SeriesFamily::new(members).unwrap();
        let out = verify_double_series(&family, 0.5, 0, &Tolerances::default()).unwrap();
        assert_eq!(out.verdict, Verdict::Pass);
    }

    #[test]
    fn singleton_family_is_exact_for_any_k() {
        let f = TruncatedSeries::polynomial_real(&[1.0, -2.0, 0.5, 3.0, -1.25]).unwrap();
        let family = SeriesFamily::new(vec![f]).unwrap();
        for k in 0..4 {
            let out = verify_double_series(&family, 2.0, k, &Tolerances::default()).unwrap();
            assert_eq!(out.verdict, Verdict::Pass, "k = {k}");
            assert_eq!(out.residual, 0.0, "identical routes, k = {k}");
        }
    }

    #[test]
    fn geometric_slices_differentiate_termwise() {
        // Members (z/2)^mu; k = 1 at r = 0.9.
        let order = 20;
        let members: Vec<TruncatedSeries> = (0..=order)
            .map(|mu| {
                let mut coeffs = vec![c(0.0, 0.0); order + 1];
                coeffs[mu] = c(0.5f64.powi(mu as i32), 0.0);
                TruncatedSeries::new(c(0.0, 0.0), coeffs).unwrap()
            })
            .collect();
        let family = SeriesFamily::new(members).unwrap();
        let out = verify_double_series(&family, 0.9, 1, &Tolerances::default()).unwrap();
        assert_eq!(out.verdict, Verdict::Pass);
        // Derivative of the truncated geometric sum in z/2.
        let sum = double_series_sum(&family, 1);
        let at = c(0.4, 0.1);
        let brute: ComplexScalar = (1..=order)
            .map(|mu| {
                c(0.5f64.powi(mu as i32), 0.0) * (mu as f64) * at.powu(mu as u32 - 1)
            })
            .sum();
        assert!((sum.series.evaluate(at) - brute).norm() < 1e-12);
    }

    #[test]
    fn radius_hint_caps_the_sample_radius() {
        let g = TruncatedSeries::geometric(8);
        let family = SeriesFamily::new(vec![g]).unwrap();
        let err = verify_double_series(&family, 1.5, 0, &Tolerances::default()).unwrap_err();
        assert_eq!(err, VerifyError::RadiusOrder { r: 1.5, outer: 1.0 });
    }
}
