//! Coefficient-energy and modulus-bound checks: the circle sandwich
//! `m(r)^2 <= sum |a_j|^2 r^(2j) <= M(r)^2`, the per-coefficient bounds
//! `|a_j| <= M(r)/r^j`, the derivative bound `M/(R-r)`, and the
//! small-everywhere-implies-null-coefficients contrapositive.

use crate::laurent::LaurentSeries;
use crate::scalar::ComplexScalar;
use crate::series::TruncatedSeries;
use crate::unity::coefficient_power_sum;

use super::{
    check_radius, check_samples, sample_circle, BindingSlack, CheckResult, Tolerances, Verdict,
    VerifyError, Witness,
};

/// Sandwich check at one radius: `S = sum |a_j|^2 r^(2j)` must sit between
/// the squared sampled extrema of `|f|` on the circle.
///
/// The upper inequality `S <= M^2` uses the sampled max as-is. The lower
/// inequality holds only when the coefficient window captures the whole
/// function at this radius (a polynomial in the stored indices); the check
/// compares `S` against the mean sampled energy and skips the lower bound,
/// with a note, when energy is missing. The sampled min is deflated by a
/// Lipschitz grid guard (max sampled difference quotient times the arc
/// step) so that grid resolution can never manufacture a failure; the guard
/// magnitude is reported in the notes.
pub fn verify_parseval<F>(
    coeffs: &[(i64, ComplexScalar)],
    f: F,
    r: f64,
    samples: usize,
    tol: &Tolerances,
) -> Result<CheckResult, VerifyError>
where
    F: Fn(ComplexScalar) -> ComplexScalar,
{
    check_radius(r)?;
    check_samples(8, samples)?;
    let energy = coefficient_power_sum(coeffs.iter().copied(), r);
    let ring = sample_circle(&f, r, samples)?;

    let mut min_mod = f64::INFINITY;
    let mut max_mod = f64::NEG_INFINITY;
    let mut argmin = ring[0].0;
    let mut argmax = ring[0].0;
    let mut val_at_min = ring[0].1;
    let mut val_at_max = ring[0].1;
    let mut lipschitz = 0.0f64;
    let mut mean_energy = 0.0f64;
    for (s, &(z, v)) in ring.iter().enumerate() {
        let m = v.norm();
        mean_energy += v.norm_sqr();
        if m < min_mod {
            min_mod = m;
            argmin = z;
            val_at_min = v;
        }
        if m > max_mod {
            max_mod = m;
            argmax = z;
            val_at_max = v;
        }
        let (zn, vn) = ring[(s + 1) % samples];
        let dz = (zn - z).norm();
        if dz > 0.0 {
            lipschitz = lipschitz.max((vn - v).norm() / dz);
        }
    }
    mean_energy /= samples as f64;

    let arc_step = std::f64::consts::TAU * r / samples as f64;
    let guard = lipschitz * arc_step;
    let deflated_min = (min_mod - guard).max(0.0);

    let scale = 1.0f64.max(energy).max(max_mod * max_mod);
    let tolerance = tol.sampled * scale;
    let upper_slack = max_mod * max_mod - energy;
    let lower_applies = mean_energy <= energy + tolerance;
    let lower_slack = energy - deflated_min * deflated_min;
    let residual = if lower_applies { upper_slack.min(lower_slack) } else { upper_slack };

    let mut out = CheckResult::from_slack("parseval", residual, tolerance)
        .with_witness(Witness::new(argmin, val_at_min))
        .with_witness(Witness::new(argmax, val_at_max))
        .with_note(format!("grid guard deflates the sampled min by {guard:.3e}"));
    if !lower_applies {
        out = out.with_note(format!(
            "lower bound skipped: sampled mean energy {mean_energy:.6e} exceeds the \
             coefficient energy {energy:.6e} (indices do not capture the function)"
        ));
    }
    Ok(out)
}

/// Per-coefficient bound `|a_j| <= M(r)/r^j` for every stored index,
/// negative indices included. The reported residual/tolerance pair belongs
/// to the binding index, which passes exactly when all indices do; the
/// witness encodes that index as the point `(j, 0)`.
pub fn verify_cauchy_bounds<F>(
    coeffs: &[(i64, ComplexScalar)],
    f: F,
    r: f64,
    samples: usize,
    tol: &Tolerances,
) -> Result<CheckResult, VerifyError>
where
    F: Fn(ComplexScalar) -> ComplexScalar,
{
    check_radius(r)?;
    check_samples(8, samples)?;
    let ring = sample_circle(&f, r, samples)?;
    let max_mod = ring.iter().map(|(_, v)| v.norm()).fold(f64::NEG_INFINITY, f64::max);

    let mut binding = BindingSlack::new();
    for (i, &(j, a)) in coeffs.iter().enumerate() {
        let bound = max_mod / r.powi(j as i32);
        let slack = bound - a.norm();
        let item_tol = tol.sampled * 1.0f64.max(bound).max(a.norm());
        binding.offer(i, slack, item_tol);
    }
    if binding.is_empty() {
        return Ok(CheckResult::from_slack("cauchy_bounds", 0.0, tol.sampled)
            .with_note("no stored coefficients: bound holds vacuously"));
    }
    let (j, a) = coeffs[binding.index];
    let out = CheckResult::from_slack("cauchy_bounds", binding.slack, binding.tolerance)
        .with_witness(Witness::new(ComplexScalar::new(j as f64, 0.0), a))
        .with_note(format!(
            "binding index j = {j}; witness point encodes the coefficient index; \
             sampled M({r}) = {max_mod:.6e}"
        ));
    Ok(out)
}

/// Checks `max |f'| on the closed disk of radius r <= M/(R - r)` given the
/// hypothesis `|f| <= M` on the open disk of radius `R`.
///
/// The hypothesis itself is only sampled (rings strictly inside `R`); a
/// disclaimer note records that, and a sampled violation of the hypothesis
/// makes the check inconclusive rather than failed.
pub fn verify_derivative_bound(
    f: &TruncatedSeries,
    sup_bound: f64,
    outer: f64,
    r: f64,
    tol: &Tolerances,
) -> Result<CheckResult, VerifyError> {
    if !(sup_bound > 0.0) || !sup_bound.is_finite() {
        return Err(VerifyError::BadGrowthParams);
    }
    check_radius(outer)?;
    check_radius(r)?;
    if r >= outer {
        return Err(VerifyError::RadiusOrder { r, outer });
    }

    // Hypothesis sampling: 8 rings strictly inside |z| = outer plus the center.
    let hypothesis_tol = tol.sampled * 1.0f64.max(sup_bound);
    let mut hyp_max = f.evaluate(f.center()).norm();
    let mut hyp_arg = f.center();
    for k in 1..=8 {
        let rho = outer * k as f64 / 9.0;
        for s in 0..256 {
            let z = f.center() + super::circle_node(rho, s, 256);
            let m = f.evaluate(z).norm();
            if m > hyp_max {
                hyp_max = m;
                hyp_arg = z;
            }
        }
    }
    if hyp_max > sup_bound + hypothesis_tol {
        return Ok(CheckResult::inconclusive(
            "derivative_bound",
            format!("sampled sup {hyp_max:.6e} exceeds the hypothesis bound {sup_bound:.6e}"),
        )
        .with_witness(Witness::new(hyp_arg, f.evaluate(hyp_arg))));
    }

    let derivative = f.derivative();
    let mut max_deriv = derivative.evaluate(f.center()).norm();
    let mut arg = f.center();
    for k in 1..=8 {
        let rho = r * k as f64 / 8.0;
        for s in 0..256 {
            let z = f.center() + super::circle_node(rho, s, 256);
            let m = derivative.evaluate(z).norm();
            if m > max_deriv {
                max_deriv = m;
                arg = z;
            }
        }
    }

    let bound = sup_bound / (outer - r);
    let slack = bound - max_deriv;
    let tolerance = tol.sampled * 1.0f64.max(bound);
    Ok(CheckResult::from_slack("derivative_bound", slack, tolerance)
        .with_witness(Witness::new(arg, derivative.evaluate(arg)))
        .with_note("derivative source: series coefficients")
        .with_note("hypothesis |f| <= M verified by interior sampling only"))
}

/// Uniqueness contrapositive: if `|L| <= ceiling` held on the sampled
/// circles, every coefficient would obey `|a_j| <= ceiling / r^j` minimized
/// over the radii. Any stored coefficient above its bound fails with the
/// index as witness; when all bounds hold, the verdict is `pass` if the
/// sampled sup actually stays at or below the ceiling and `inconclusive`
/// otherwise (the premise could not be confirmed at grid resolution).
pub fn verify_laurent_uniqueness(
    laurent: &LaurentSeries,
    radii: &[f64],
    ceiling: f64,
    tol: &Tolerances,
) -> Result<CheckResult, VerifyError> {
    if radii.is_empty() || radii.windows(2).any(|w| w[0] >= w[1]) {
        return Err(VerifyError::BadRadii);
    }
    if !(ceiling >= 0.0) || !ceiling.is_finite() {
        return Err(VerifyError::BadGrowthParams);
    }
    let (inner, outer) = laurent.annulus();
    for &r in radii {
        check_radius(r)?;
        if r <= inner || r >= outer {
            return Err(VerifyError::RadiusOrder { r, outer });
        }
    }

    let mut sup = 0.0f64;
    let mut sup_arg = ComplexScalar::new(radii[0], 0.0);
    for &r in radii {
        for s in 0..512 {
            let z = super::circle_node(r, s, 512);
            let v = laurent.evaluate(z)?;
            if v.norm() > sup {
                sup = v.norm();
                sup_arg = z;
            }
        }
    }

    let indexed: Vec<(i64, ComplexScalar)> = laurent.indexed_coeffs().collect();
    let mut binding = BindingSlack::new();
    for (i, &(j, a)) in indexed.iter().enumerate() {
        let bound = radii
            .iter()
            .map(|&r| ceiling / r.powi(j as i32))
            .fold(f64::INFINITY, f64::min);
        let slack = bound - a.norm();
        let item_tol = tol.sampled * 1.0f64.max(bound).max(a.norm());
        binding.offer(i, slack, item_tol);
    }
    let (j, a) = indexed[binding.index];
    let mut out = CheckResult::from_slack("laurent_uniqueness", binding.slack, binding.tolerance)
        .with_witness(Witness::new(ComplexScalar::new(j as f64, 0.0), a))
        .with_note(format!(
            "binding index j = {j}; witness point encodes the coefficient index; \
             claimed ceiling {ceiling:.3e}, sampled sup {sup:.6e}"
        ));
    if out.verdict == Verdict::Pass && sup > ceiling + tol.sampled * 1.0f64.max(ceiling) {
        out.verdict = Verdict::Inconclusive;
        out = out
            .with_note("coefficients respect the bounds but the sampled sup exceeds the ceiling")
            .with_witness(Witness::new(sup_arg, laurent.evaluate(sup_arg)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::TruncatedSeries;

    fn c(re: f64, im: f64) -> ComplexScalar {
        ComplexScalar::new(re, im)
    }

    fn indexed(f: &TruncatedSeries) -> Vec<(i64, ComplexScalar)> {
        f.indexed_coeffs().collect()
    }

    #[test]
    fn parseval_on_one_plus_z() {
        // S = 2 sits between m^2 ~ 0 and M^2 = 4.
        let f = TruncatedSeries::polynomial_real(&[1.0, 1.0]).unwrap();
        let out =
            verify_parseval(&indexed(&f), |z| f.evaluate(z), 1.0, 1024, &Tolerances::default())
                .unwrap();
        assert_eq!(out.verdict, Verdict::Pass);
        assert!(out.residual > 0.0);
    }

    #[test]
    fn parseval_equality_for_rotated_monomial() {
        // f = w z^3 with |w| = 1: S = r^6 and m = M = r^3 exactly.
        let w = ComplexScalar::from_polar(1.0, 0.7);
        let mut coeffs = vec![c(0.0, 0.0); 4];
        coeffs[3] = w;
        let f = TruncatedSeries::polynomial(coeffs).unwrap();
        let r = 1.3;
        let out = verify_parseval(&indexed(&f), |z| f.evaluate(z), r, 512, &Tolerances::default())
            .unwrap();
        assert_eq!(out.verdict, Verdict::Pass);
        let s = r.powi(6);
        assert!(out.residual.abs() <= 1e-10 * s, "equalities bind: {}", out.residual);
    }

    #[test]
    fn parseval_on_laurent_pair() {
        // L = z + 1/z at r = 1: S = 2, M = 2 (|2 cos t| extremes), m = 0.
        let l = LaurentSeries::new(vec![c(1.0, 0.0)], vec![c(0.0, 0.0), c(1.0, 0.0)], (0.5, 2.0))
            .unwrap();
        let coeffs: Vec<_> = l.indexed_coeffs().collect();
        let out = verify_parseval(
            &coeffs,
            |z| l.evaluate(z).unwrap(),
            1.0,
            1024,
            &Tolerances::default(),
        )
        .unwrap();
        assert_eq!(out.verdict, Verdict::Pass);
        // S = 2, M^2 = 4: upper slack 2; lower slack is S - 0 = 2.
        assert!((out.residual - 2.0).abs() < 1e-2, "residual {}", out.residual);
    }

    #[test]
    fn parseval_skips_lower_bound_when_energy_is_missing() {
        // Truncating z^3 to its first two coefficients hides all the energy:
        // S = 0 while the sampled circle carries plenty.
        let f = TruncatedSeries::polynomial_real(&[0.0, 0.0, 0.0, 1.0]).unwrap();
        let window = indexed(&f)[..2].to_vec();
        let out =
            verify_parseval(&window, |z| f.evaluate(z), 1.0, 256, &Tolerances::default()).unwrap();
        assert_eq!(out.verdict, Verdict::Pass);
        assert!(out.notes.iter().any(|n| n.contains("lower bound skipped")));
    }

    #[test]
    fn cauchy_bounds_for_geometric_coefficients() {
        let f = TruncatedSeries::geometric(24);
        let out = verify_cauchy_bounds(
            &indexed(&f),
            |z| f.evaluate(z),
            0.5,
            1024,
            &Tolerances::default(),
        )
        .unwrap();
        assert_eq!(out.verdict, Verdict::Pass);
    }

    #[test]
    fn cauchy_bounds_bind_with_equality_on_monomials() {
        // f = z^5: |a_5| = 1 = M(r)/r^5 for every r.
        let mut coeffs = vec![c(0.0, 0.0); 6];
        coeffs[5] = c(1.0, 0.0);
        let f = TruncatedSeries::polynomial(coeffs).unwrap();
        let out = verify_cauchy_bounds(
            &indexed(&f),
            |z| f.evaluate(z),
            1.7,
            512,
            &Tolerances::default(),
        )
        .unwrap();
        assert_eq!(out.verdict, Verdict::Pass);
        assert!(out.residual.abs() < 1e-10);
        assert_eq!(out.witnesses[0].point, c(5.0, 0.0));
    }

    #[test]
    fn cauchy_bounds_cover_negative_indices() {
        let l = LaurentSeries::new(vec![c(1.0, 0.0)], vec![c(0.0, 0.0), c(1.0, 0.0)], (0.5, 2.0))
            .unwrap();
        let coeffs: Vec<_> = l.indexed_coeffs().collect();
        let out = verify_cauchy_bounds(
            &coeffs,
            |z| l.evaluate(z).unwrap(),
            1.0,
            512,
            &Tolerances::default(),
        )
        .unwrap();
        // M(1) = 2, bounds 2/r^j = 2 for every j: slack 1 at j = -1 and 1.
        assert_eq!(out.verdict, Verdict::Pass);
        assert!((out.residual - 1.0).abs() < 1e-3);
    }

    #[test]
    fn cauchy_bounds_fail_when_a_coefficient_is_inflated() {
        // Claim a_3 = 9 for the function (1+z): M(1) = 2 bounds a_3 by 2.
        let f = TruncatedSeries::polynomial_real(&[1.0, 1.0]).unwrap();
        let forged = vec![(0i64, c(1.0, 0.0)), (1, c(1.0, 0.0)), (3, c(9.0, 0.0))];
        let out =
            verify_cauchy_bounds(&forged, |z| f.evaluate(z), 1.0, 512, &Tolerances::default())
                .unwrap();
        assert_eq!(out.verdict, Verdict::Fail);
        assert_eq!(out.witnesses[0].point, c(3.0, 0.0));
        assert!(!out.witnesses.is_empty());
    }

    #[test]
    fn derivative_bound_for_linear_map() {
        let f = TruncatedSeries::polynomial_real(&[0.0, 1.0]).unwrap();
        let out = verify_derivative_bound(&f, 2.0, 2.0, 1.0, &Tolerances::default()).unwrap();
        // |f'| = 1 <= 2/(2-1) = 2.
        assert_eq!(out.verdict, Verdict::Pass);
        assert!((out.residual - 1.0).abs() < 1e-9);
    }

    #[test]
    fn derivative_bound_for_exp() {
        let f = TruncatedSeries::exp(20);
        let e = std::f64::consts::E;
        let out = verify_derivative_bound(&f, e, 1.0, 0.5, &Tolerances::default()).unwrap();
        assert_eq!(out.verdict, Verdict::Pass);
        // max |f'| = e^{1/2}, bound = e/(1/2) = 2e.
        let want = 2.0 * e - 0.5f64.exp();
        assert!((out.residual - want).abs() < 1e-6, "residual {}", out.residual);
    }

    #[test]
    fn derivative_bound_flags_a_false_hypothesis() {
        // |2z| reaches ~1.78 on the sampled rings inside |z| = 1, above M = 1.
        let f = TruncatedSeries::polynomial_real(&[0.0, 2.0]).unwrap();
        let out = verify_derivative_bound(&f, 1.0, 1.0, 0.5, &Tolerances::default()).unwrap();
        assert_eq!(out.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn derivative_bound_rejects_reversed_radii() {
        let f = TruncatedSeries::exp(8);
        let err = verify_derivative_bound(&f, 1.0, 0.5, 0.5, &Tolerances::default()).unwrap_err();
        assert_eq!(err, VerifyError::RadiusOrder { r: 0.5, outer: 0.5 });
    }

    #[test]
    fn laurent_uniqueness_passes_for_zero() {
        let l = LaurentSeries::new(vec![], vec![c(0.0, 0.0)], (0.1, 10.0)).unwrap();
        let out =
            verify_laurent_uniqueness(&l, &[0.5, 1.0, 2.0], 1e-9, &Tolerances::default()).unwrap();
        assert_eq!(out.verdict, Verdict::Pass);
    }

    #[test]
    fn laurent_uniqueness_catches_a_loud_coefficient() {
        // a_{-1} = 1e-3 cannot coexist with sup <= 1e-9 at r = 1.
        let l = LaurentSeries::new(vec![c(1e-3, 0.0)], vec![c(0.0, 0.0)], (0.1, 10.0)).unwrap();
        let out = verify_laurent_uniqueness(&l, &[1.0], 1e-9, &Tolerances::default()).unwrap();
        assert_eq!(out.verdict, Verdict::Fail);
        assert_eq!(out.witnesses[0].point, c(-1.0, 0.0));
    }

    #[test]
    fn laurent_uniqueness_is_inconclusive_when_premise_fails_loudly() {
        // L = 4e-3 (z + 1/z) at r = 1: each |a_j| = 4e-3 sits inside the
        // ceiling-6e-3 bound, but the coefficients add up on the circle to a
        // sampled sup of 8e-3, so the premise itself is refuted.
        let l = LaurentSeries::new(
            vec![c(4e-3, 0.0)],
            vec![c(0.0, 0.0), c(4e-3, 0.0)],
            (0.1, 10.0),
        )
        .unwrap();
        let out = verify_laurent_uniqueness(&l, &[1.0], 6e-3, &Tolerances::default()).unwrap();
        assert_eq!(out.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn laurent_uniqueness_rejects_radii_outside_the_annulus() {
        let l = LaurentSeries::new(vec![c(1.0, 0.0)], vec![c(0.0, 0.0)], (0.5, 2.0)).unwrap();
        let err =
            verify_laurent_uniqueness(&l, &[0.5], 1.0, &Tolerances::default()).unwrap_err();
        assert!(matches!(err, VerifyError::RadiusOrder { .. }));
    }
}
