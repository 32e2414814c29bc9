//! Degree detection from growth bounds: a function with
//! `|f(z)| <= A + B|z|^N` has `|a_n| <= (A + B r^N) / r^n` at every radius,
//! which forces every coefficient beyond index `N` to vanish. The check
//! combines that static bound with a radius-growth test on the extracted
//! coefficient estimates.

use crate::scalar::ComplexScalar;
use crate::unity::{alternating_coefficient_extract, UnityGrid};

use super::{check_radius, BindingSlack, CheckResult, Tolerances, Verdict, VerifyError, Witness};

/// Estimates `a_0..=a_order` of `f` about 0 from circle samples at radius
/// `r`: index 0 by a uniform `2(order+1)`-point average, index `n >= 1` by
/// the alternating `2n`-point extraction. The estimate of `a_n` carries the
/// alias terms `a_{3n} r^{2n} + a_{5n} r^{4n} + ...`, which vanish for any
/// polynomial of degree below `3n`.
pub fn extract_coefficient_estimates<F>(
    f: &F,
    order: usize,
    r: f64,
) -> Result<Vec<ComplexScalar>, VerifyError>
where
    F: Fn(ComplexScalar) -> ComplexScalar,
{
    check_radius(r)?;
    let mut out = Vec::with_capacity(order + 1);
    let grid = UnityGrid::new(order + 1)?;
    let mut mean = ComplexScalar::new(0.0, 0.0);
    for &node in grid.nodes() {
        mean += f(node * r);
    }
    out.push(mean / (2.0 * (order + 1) as f64));
    for n in 1..=order {
        out.push(alternating_coefficient_extract(f, n, ComplexScalar::new(r, 0.0))?);
    }
    Ok(out)
}

/// Checks that `f` is consistent with polynomial degree at most `claimed`
/// under the growth hypothesis `|f| <= A + B|z|^claimed`.
///
/// Both layers look at the indices `n > claimed`, where the extraction
/// aliases (`3n, 5n, ...`) also lie beyond the claim, so a compliant
/// polynomial yields exact zeros there. (1) Static bounds: the estimate at
/// each radius must obey `|a_n| <= (A + B r^claimed) / r^n`, the triangle
/// consequence of the growth hypothesis at that same radius. (2) Growth:
/// the estimates must not grow along the radii; growth can only come from
/// alias coefficients beyond the claim. A growth failure is witnessed by
/// the offending radius.
pub fn detect_polynomial_degree<F>(
    f: F,
    a: f64,
    b: f64,
    claimed: usize,
    radii: &[f64],
    order: usize,
    tol: &Tolerances,
) -> Result<CheckResult, VerifyError>
where
    F: Fn(ComplexScalar) -> ComplexScalar,
{
    if radii.is_empty() || radii.windows(2).any(|w| w[0] >= w[1]) {
        return Err(VerifyError::BadRadii);
    }
    for &r in radii {
        check_radius(r)?;
    }
    if order <= claimed {
        return Err(VerifyError::OrderBelowClaim { order, claimed });
    }
    if !(a >= 0.0) || !a.is_finite() || !(b >= 0.0) || !b.is_finite() {
        return Err(VerifyError::BadGrowthParams);
    }

    let estimates: Vec<Vec<ComplexScalar>> = radii
        .iter()
        .map(|&r| extract_coefficient_estimates(&f, order, r))
        .collect::<Result<_, _>>()?;

    // Static bound layer on the indices beyond the claim, estimates paired
    // with the bound at their own extraction radius.
    let mut binding = BindingSlack::new();
    for (i, &r) in radii.iter().enumerate() {
        for n in (claimed + 1)..=order {
            let bound = (a + b * r.powi(claimed as i32)) / r.powi(n as i32);
            let est = estimates[i][n].norm();
            let slack = bound - est;
            let item_tol = tol.sampled * 1.0f64.max(bound).max(est);
            binding.offer(n, slack, item_tol);
        }
    }

    // Growth layer: estimates of indices beyond the claim must be
    // radius-independent (they are exactly zero for a compliant polynomial).
    let mut growth_witness: Option<(usize, usize, f64)> = None;
    for n in (claimed + 1)..=order {
        for i in 1..radii.len() {
            let step = (estimates[i][n] - estimates[i - 1][n]).norm();
            let item_tol = tol.sampled * (1.0 + estimates[i][n].norm());
            binding.offer(n, -step, item_tol);
            if step > item_tol && growth_witness.is_none() {
                growth_witness = Some((n, i, step));
            }
        }
    }

    let worst_n = binding.index;
    let mut out = CheckResult::from_slack("polynomial_degree", binding.slack, binding.tolerance)
        .with_note(format!("claimed degree <= {claimed}; binding index n = {worst_n}"));
    if let Some((n, i, step)) = growth_witness {
        out.verdict = Verdict::Fail;
        out = out
            .with_witness(Witness::new(ComplexScalar::new(radii[i], 0.0), estimates[i][n]))
            .with_note(format!(
                "estimate of a_{n} grows by {step:.3e} between r = {} and r = {}: \
                 coefficients beyond the claimed degree are present",
                radii[i - 1],
                radii[i]
            ));
    } else if out.verdict == Verdict::Fail {
        out = out
            .with_witness(Witness::new(
                ComplexScalar::new(worst_n as f64, 0.0),
                estimates[0][worst_n],
            ))
            .with_note("witness point encodes the coefficient index violating the static bound");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_is_consistent_with_degree_five() {
        let f = |z: ComplexScalar| z * z * z + 2.0 * z;
        let out = detect_polynomial_degree(
            f,
            0.0,
            1.0,
            5,
            &[1.0, 2.0, 4.0, 8.0],
            10,
            &Tolerances::default(),
        )
        .unwrap();
        assert_eq!(out.verdict, Verdict::Pass);
        let ests = extract_coefficient_estimates(&f, 8, 1.0).unwrap();
        for (n, est) in ests.iter().enumerate().skip(4) {
            assert!(est.norm() < 1e-9, "a_{n} estimate {est}");
        }
    }

    #[test]
    fn constant_detected_with_pure_a_bound() {
        let f = |_: ComplexScalar| ComplexScalar::new(7.0, 0.0);
        let out =
            detect_polynomial_degree(f, 7.0, 0.0, 0, &[1.0, 2.0], 6, &Tolerances::default())
                .unwrap();
        assert_eq!(out.verdict, Verdict::Pass);
    }

    #[test]
    fn exp_fails_a_cubic_growth_claim() {
        let f = |z: ComplexScalar| z.exp();
        let out = detect_polynomial_degree(
            f,
            0.0,
            1.0,
            3,
            &[1.0, 2.0, 4.0, 8.0],
            10,
            &Tolerances::default(),
        )
        .unwrap();
        assert_eq!(out.verdict, Verdict::Fail);
        assert!(!out.witnesses.is_empty());
        // The witness point encodes the radius where an estimate grew.
        let witness_radius = out.witnesses[0].point.re;
        assert!([2.0, 4.0, 8.0].contains(&witness_radius), "at r = {witness_radius}");
        assert!(out.notes.iter().any(|n| n.contains("grows")));
    }

    #[test]
    fn degree_recovery_via_estimates() {
        // Estimates alias at indices 3n, 5n, ...; for this degree-7 input the
        // estimate of a_n is exact once 3n > 7, index 0 is a clean mean, and
        // every index above the degree is null. The polluted low indices must
        // match the alias formula a_n + a_{3n} r^{2n}.
        let coeffs = [0.5, -1.0, 0.0, 2.0, 0.0, 0.0, -0.25, 1.5];
        let f = |z: ComplexScalar| {
            let mut acc = ComplexScalar::new(0.0, 0.0);
            for &c in coeffs.iter().rev() {
                acc = acc * z + c;
            }
            acc
        };
        let r = 2.0;
        let ests = extract_coefficient_estimates(&f, 12, r).unwrap();
        for (n, est) in ests.iter().enumerate() {
            let want = if n == 0 {
                coeffs[0]
            } else {
                let mut acc = 0.0;
                let mut m = n;
                while m < coeffs.len() {
                    acc += coeffs[m] * r.powi((m - n) as i32);
                    m += 2 * n;
                }
                acc
            };
            assert!(
                (est - ComplexScalar::new(want, 0.0)).norm() < 1e-10,
                "n = {n}, est = {est}, want = {want}"
            );
            if n > 7 {
                assert!(est.norm() < 1e-10, "degree bound violated at n = {n}");
            }
        }
    }

    #[test]
    fn argument_validation() {
        let f = |z: ComplexScalar| z;
        assert_eq!(
            detect_polynomial_degree(f, 0.0, 1.0, 1, &[], 4, &Tolerances::default()).unwrap_err(),
            VerifyError::BadRadii
        );
        assert_eq!(
            detect_polynomial_degree(f, 0.0, 1.0, 4, &[1.0], 4, &Tolerances::default())
                .unwrap_err(),
            VerifyError::OrderBelowClaim { order: 4, claimed: 4 }
        );
        assert_eq!(
            detect_polynomial_degree(f, -1.0, 1.0, 1, &[1.0], 4, &Tolerances::default())
                .unwrap_err(),
            VerifyError::BadGrowthParams
        );
    }
}
