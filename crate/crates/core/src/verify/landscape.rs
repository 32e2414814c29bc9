//! Checks on the modulus landscape |f|: critical-point classification
//! (saddle / zero / regular), the boundary placement of modulus extrema and
//! the nonvanishing derivative at a boundary maximum, interior-vs-boundary
//! maxima, and the open-image disk around f(0).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalar::{is_finite, ComplexScalar};
use crate::series::TruncatedSeries;

use super::{
    check_radius, check_samples, circle_node, CheckResult, DifferentiableSubject, Tolerances,
    VerifyError, Witness,
};

/// Classifies `z0` on the landscape of `|f|` from the recentered
/// coefficients: a saddle (`f'(z0) = 0`, `f(z0) != 0`), a zero (local
/// minimum of `|f|`), or a regular point (no extremum). The classification
/// is then cross-checked against direct samples of `|f|`: a central
/// finite-difference gradient (step 1e-5), and, for saddles, directional
/// probes at distance 1e-3 in the four axis directions, which must exhibit
/// both signs. Disagreement between coefficients and samples is a failure.
pub fn classify_critical_point(
    f: &TruncatedSeries,
    z0: ComplexScalar,
    tol: &Tolerances,
) -> Result<CheckResult, VerifyError> {
    let local = if (z0 - f.center()).norm() == 0.0 { f.clone() } else { f.recenter(z0)? };
    let value = local.coeff(0);
    let slope = local.coeff(1);
    let scale = local
        .coeffs()
        .iter()
        .map(|c| c.norm())
        .fold(1.0f64, f64::max);
    let threshold = tol.derivative_significance * scale;

    let h = 1e-5;
    let probe = |dz: ComplexScalar| f.evaluate(z0 + dz).norm();
    let gx = (probe(ComplexScalar::new(h, 0.0)) - probe(ComplexScalar::new(-h, 0.0))) / (2.0 * h);
    let gy = (probe(ComplexScalar::new(0.0, h)) - probe(ComplexScalar::new(0.0, -h))) / (2.0 * h);
    let gradient = gx.hypot(gy);

    let mut margins: Vec<f64> = Vec::new();
    let classification;
    if value.norm() <= threshold {
        classification = "zero (local minimum of |f|)";
        margins.push(threshold - value.norm());
        // The cone |f| ~ |z - z0|^m has a vanishing central difference.
        margins.push(2.0 * threshold - gradient);
    } else if slope.norm() <= threshold {
        classification = "saddle";
        margins.push(threshold - slope.norm());
        margins.push(value.norm() - threshold);
        margins.push(2.0 * threshold - gradient);
        let eps = 1e-3;
        let base = value.norm();
        let mut best_up = f64::NEG_INFINITY;
        let mut best_down = f64::INFINITY;
        let mut samples = Vec::with_capacity(4);
        for k in 0..4 {
            let dir = circle_node(eps, k, 4);
            let s = probe(dir) - base;
            best_up = best_up.max(s);
            best_down = best_down.min(s);
            samples.push(format!("{s:+.3e}"));
        }
        margins.push(best_up);
        margins.push(-best_down);
        let residual = margins.iter().copied().fold(f64::INFINITY, f64::min);
        return Ok(finish_classification(residual, classification, z0, value, slope)
            .with_note(format!(
                "directional probes at distance {eps:.0e}: [{}] (both signs required)",
                samples.join(", ")
            ))
            .with_note(format!("finite-difference gradient {gradient:.3e}")));
    } else {
        classification = "regular point (no extremum of |f|)";
        margins.push(slope.norm() - threshold);
        margins.push(gradient - threshold / 2.0);
    }
    let residual = margins.iter().copied().fold(f64::INFINITY, f64::min);
    Ok(finish_classification(residual, classification, z0, value, slope)
        .with_note(format!("finite-difference gradient {gradient:.3e}")))
}

fn finish_classification(
    residual: f64,
    classification: &str,
    z0: ComplexScalar,
    value: ComplexScalar,
    slope: ComplexScalar,
) -> CheckResult {
    CheckResult::from_slack("critical_point", residual, 0.0)
        .with_witness(Witness::new(z0, value))
        .with_witness(Witness::new(z0, slope))
        .with_note(format!("classification: {classification}"))
        .with_note("witnesses carry f(z0) and f'(z0) at the classified point")
}

/// Extrema placement and derivative conditions on a sampled closed disk of
/// radius `big_r`: the modulus maximum must sit on the boundary ring with
/// `f' != 0` there, and the minimum must either sit on the boundary with
/// `f(min) = 0 or f'(min) != 0`, or be an interior zero of `f`. Grid
/// evidence that cannot place the extrema is reported as inconclusive.
pub fn verify_anti_calculus(
    subject: &DifferentiableSubject<'_>,
    big_r: f64,
    samples: usize,
    tol: &Tolerances,
) -> Result<CheckResult, VerifyError> {
    check_radius(big_r)?;
    check_samples(8, samples)?;

    let rings = 16usize;
    let mut points: Vec<(usize, ComplexScalar, ComplexScalar)> = Vec::new();
    let origin = ComplexScalar::new(0.0, 0.0);
    let v0 = subject.value(origin);
    if !is_finite(v0) {
        return Err(VerifyError::NonFiniteSample(origin));
    }
    points.push((0, origin, v0));
    for k in 1..=rings {
        let rho = big_r * k as f64 / rings as f64;
        for s in 0..samples {
            let z = circle_node(rho, s, samples);
            let v = subject.value(z);
            if !is_finite(v) {
                return Err(VerifyError::NonFiniteSample(z));
            }
            points.push((k, z, v));
        }
    }

    let count = points.len() as f64;
    let mean = points.iter().map(|(_, _, v)| v).sum::<ComplexScalar>() / count;
    let variance = points.iter().map(|(_, _, v)| (v - mean).norm_sqr()).sum::<f64>() / count;
    let value_scale = points.iter().map(|(_, _, v)| v.norm()).fold(1.0f64, f64::max);
    if variance.sqrt() <= tol.sampled * value_scale {
        return Ok(CheckResult::inconclusive(
            "anti_calculus",
            "sampled values are nearly constant: extrema placement is meaningless",
        ));
    }

    let (max_ring, max_z, max_v) = points
        .iter()
        .fold(None, |acc: Option<&(usize, ComplexScalar, ComplexScalar)>, p| match acc {
            Some(best) if best.2.norm() >= p.2.norm() => Some(best),
            _ => Some(p),
        })
        .copied()
        .expect("grid is non-empty");
    let (min_ring, min_z, min_v) = points
        .iter()
        .fold(None, |acc: Option<&(usize, ComplexScalar, ComplexScalar)>, p| match acc {
            Some(best) if best.2.norm() <= p.2.norm() => Some(best),
            _ => Some(p),
        })
        .copied()
        .expect("grid is non-empty");

    if max_ring < rings {
        return Ok(CheckResult::inconclusive(
            "anti_calculus",
            format!("grid maximum lies in the interior at {max_z}: unresolved at this resolution"),
        )
        .with_witness(Witness::new(max_z, max_v)));
    }
    let near_zero_min = min_v.norm() <= tol.sampled * value_scale;
    if min_ring < rings && !near_zero_min {
        return Ok(CheckResult::inconclusive(
            "anti_calculus",
            format!(
                "grid minimum lies in the interior at {min_z} without a detected zero of f"
            ),
        )
        .with_witness(Witness::new(min_z, min_v)));
    }

    let d_max = subject.derivative_at(max_z);
    let sig_max = tol.derivative_significance * 1.0f64.max(max_v.norm());
    let margin_max = d_max.norm() - sig_max;
    let margin_min = if near_zero_min {
        tol.sampled * value_scale - min_v.norm()
    } else {
        let d_min = subject.derivative_at(min_z);
        let sig_min = tol.derivative_significance * 1.0f64.max(min_v.norm());
        d_min.norm() - sig_min
    };

    let residual = margin_max.min(margin_min);
    Ok(CheckResult::from_slack("anti_calculus", residual, 0.0)
        .with_witness(Witness::new(max_z, d_max))
        .with_witness(Witness::new(min_z, min_v))
        .with_note(subject.derivative_note())
        .with_note(if near_zero_min {
            "minimum handled by the zero branch".to_string()
        } else {
            "minimum handled by the nonzero-derivative branch".to_string()
        }))
}

/// Interior-vs-boundary maximum: the sampled max of `|f|` over interior
/// rings must not exceed the sampled max over the boundary ring.
pub fn verify_boundary_max<F>(
    f: F,
    big_r: f64,
    interior_samples: usize,
    boundary_samples: usize,
    tol: &Tolerances,
) -> Result<CheckResult, VerifyError>
where
    F: Fn(ComplexScalar) -> ComplexScalar,
{
    check_radius(big_r)?;
    check_samples(8, interior_samples)?;
    check_samples(8, boundary_samples)?;

    let rings = 8usize;
    let angles = (interior_samples / rings).max(8);
    let origin = ComplexScalar::new(0.0, 0.0);
    let v0 = f(origin);
    if !is_finite(v0) {
        return Err(VerifyError::NonFiniteSample(origin));
    }
    let mut interior_max = v0.norm();
    let mut interior_arg = origin;
    let mut spread_min = v0.norm();
    for k in 1..=rings {
        let rho = big_r * k as f64 / (rings + 1) as f64;
        for s in 0..angles {
            let z = circle_node(rho, s, angles);
            let v = f(z);
            if !is_finite(v) {
                return Err(VerifyError::NonFiniteSample(z));
            }
            if v.norm() > interior_max {
                interior_max = v.norm();
                interior_arg = z;
            }
            spread_min = spread_min.min(v.norm());
        }
    }
    let mut boundary_max = f64::NEG_INFINITY;
    let mut boundary_arg = origin;
    for s in 0..boundary_samples {
        let z = circle_node(big_r, s, boundary_samples);
        let v = f(z);
        if !is_finite(v) {
            return Err(VerifyError::NonFiniteSample(z));
        }
        if v.norm() > boundary_max {
            boundary_max = v.norm();
            boundary_arg = z;
        }
    }

    let scale = 1.0f64.max(boundary_max).max(interior_max);
    if (interior_max.max(boundary_max) - spread_min.min(boundary_max)) <= tol.sampled * scale {
        return Ok(CheckResult::inconclusive(
            "boundary_max",
            "sampled values are nearly constant: the principle is vacuous at grid scale",
        ));
    }

    let residual = boundary_max - interior_max;
    Ok(CheckResult::from_slack("boundary_max", residual, tol.sampled * scale)
        .with_witness(Witness::new(interior_arg, f(interior_arg)))
        .with_witness(Witness::new(boundary_arg, f(boundary_arg))))
}

/// Open-image check: with `delta` the sampled distance from `f(0)` to the
/// image of the circle `|z| = r`, every target drawn uniformly from the
/// disk of radius `delta / 2` around `f(0)` must be attained by `f` on the
/// closed disk within `1e-3 * delta`. Attainment uses a polar solve grid
/// followed by a Newton refinement from the best cell (derivative by
/// central differences). Targets are drawn from the given seed.
pub fn verify_open_image<F>(
    f: F,
    r: f64,
    target_count: usize,
    solve_grid: usize,
    seed: u64,
    tol: &Tolerances,
) -> Result<CheckResult, VerifyError>
where
    F: Fn(ComplexScalar) -> ComplexScalar,
{
    check_radius(r)?;
    check_samples(1, target_count)?;
    check_samples(8, solve_grid)?;

    let origin = ComplexScalar::new(0.0, 0.0);
    let f0 = f(origin);
    if !is_finite(f0) {
        return Err(VerifyError::NonFiniteSample(origin));
    }
    let boundary_samples = solve_grid.max(256);
    let mut delta = f64::INFINITY;
    for s in 0..boundary_samples {
        let z = circle_node(r, s, boundary_samples);
        let v = f(z);
        if !is_finite(v) {
            return Err(VerifyError::NonFiniteSample(z));
        }
        delta = delta.min((v - f0).norm());
    }
    if delta <= tol.sampled * 1.0f64.max(f0.norm()) {
        return Ok(CheckResult::inconclusive(
            "open_image",
            format!("f(0) is attained on the sampled circle (delta = {delta:.3e})"),
        ));
    }

    // Evaluate the solve grid once; every target reuses it.
    let mut grid: Vec<(ComplexScalar, ComplexScalar)> = Vec::with_capacity(solve_grid * solve_grid + 1);
    grid.push((origin, f0));
    for k in 1..=solve_grid {
        let rho = r * k as f64 / solve_grid as f64;
        for s in 0..solve_grid {
            let z = circle_node(rho, s, solve_grid);
            let v = f(z);
            if !is_finite(v) {
                return Err(VerifyError::NonFiniteSample(z));
            }
            grid.push((z, v));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let attain_tol = 1e-3 * delta;
    let mut worst_dist = 0.0f64;
    let mut worst_target = f0;
    let mut worst_point = origin;
    for _ in 0..target_count {
        let radius = 0.5 * delta * rng.gen::<f64>().sqrt();
        let angle = std::f64::consts::TAU * rng.gen::<f64>();
        let target = f0 + ComplexScalar::from_polar(radius, angle);

        let (mut best_z, mut best_v) = grid[0];
        let mut best_dist = (best_v - target).norm();
        for &(z, v) in &grid[1..] {
            let d = (v - target).norm();
            if d < best_dist {
                best_dist = d;
                best_z = z;
                best_v = v;
            }
        }
        // Newton refinement from the best cell; stop on domain exit or stall.
        let mut z = best_z;
        let mut v = best_v;
        for _ in 0..48 {
            if best_dist <= 1e-14 * 1.0f64.max(target.norm()) {
                break;
            }
            let h = 1e-6 * z.norm().max(1.0);
            let step = ComplexScalar::new(h, 0.0);
            let d = (f(z + step) - f(z - step)) / (2.0 * h);
            if !is_finite(d) || d.norm() <= 1e-14 {
                break;
            }
            let next = z - (v - target) / d;
            if !is_finite(next) || next.norm() > r {
                break;
            }
            z = next;
            v = f(z);
            let dist = (v - target).norm();
            if dist < best_dist {
                best_dist = dist;
                best_z = z;
            }
        }
        if best_dist > worst_dist {
            worst_dist = best_dist;
            worst_target = target;
            worst_point = best_z;
        }
    }

    Ok(CheckResult::from_slack("open_image", -worst_dist, attain_tol)
        .with_witness(Witness::new(worst_point, f(worst_point)))
        .with_note(format!(
            "delta = {delta:.6e}; worst target {worst_target} missed by {worst_dist:.3e}; \
             {target_count} targets from seed {seed}"
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
    fn saddle_at_origin_of_one_plus_z_squared() {
        let f = TruncatedSeries::polynomial_real(&[1.0, 0.0, 1.0]).unwrap();
        let out = classify_critical_point(&f, c(0.0, 0.0), &Tolerances::default()).unwrap();
        assert_eq!(out.verdict, Verdict::Pass);
        assert!(out.notes.iter().any(|n| n.contains("classification: saddle")));
        assert!(out.notes.iter().any(|n| n.contains("directional probes")));
    }

    #[test]
    fn zero_at_origin_of_z_squared() {
        let f = TruncatedSeries::polynomial_real(&[0.0, 0.0, 1.0]).unwrap();
        let out = classify_critical_point(&f, c(0.0, 0.0), &Tolerances::default()).unwrap();
        assert_eq!(out.verdict, Verdict::Pass);
        assert!(out.notes.iter().any(|n| n.contains("zero (local minimum")));
    }

    #[test]
    fn regular_point_of_translation() {
        let f = TruncatedSeries::polynomial_real(&[5.0, 1.0]).unwrap();
        let out = classify_critical_point(&f, c(0.0, 0.0), &Tolerances::default()).unwrap();
        assert_eq!(out.verdict, Verdict::Pass);
        assert!(out.notes.iter().any(|n| n.contains("regular point")));
    }

    #[test]
    fn classification_works_away_from_the_center() {
        // f = (z - 1)^2 + 2 has a saddle at z = 1.
        let f = TruncatedSeries::polynomial_real(&[3.0, -2.0, 1.0]).unwrap();
        let out = classify_critical_point(&f, c(1.0, 0.0), &Tolerances::default()).unwrap();
        assert_eq!(out.verdict, Verdict::Pass);
        assert!(out.notes.iter().any(|n| n.contains("saddle")));
        assert!((out.witnesses[0].value - c(2.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn anti_calculus_for_exp() {
        let f = TruncatedSeries::exp(24);
        let out = verify_anti_calculus(
            &DifferentiableSubject::Series(&f),
            1.0,
            512,
            &Tolerances::default(),
        )
        .unwrap();
        assert_eq!(out.verdict, Verdict::Pass);
        // Max near z = 1 where f' = e.
        assert!((out.witnesses[0].point - c(1.0, 0.0)).norm() < 0.02);
    }

    #[test]
    fn anti_calculus_identity_passes_through_interior_zero() {
        let f = TruncatedSeries::polynomial_real(&[0.0, 1.0]).unwrap();
        let out = verify_anti_calculus(
            &DifferentiableSubject::Series(&f),
            1.0,
            256,
            &Tolerances::default(),
        )
        .unwrap();
        assert_eq!(out.verdict, Verdict::Pass);
        assert!(out.notes.iter().any(|n| n.contains("zero branch")));
    }

    #[test]
    fn anti_calculus_boundary_zero_of_z_squared_plus_one() {
        let f = TruncatedSeries::polynomial_real(&[1.0, 0.0, 1.0]).unwrap();
        let out = verify_anti_calculus(
            &DifferentiableSubject::Series(&f),
            1.0,
            1024,
            &Tolerances::default(),
        )
        .unwrap();
        assert_eq!(out.verdict, Verdict::Pass);
        // Minimum on the boundary near +-i.
        let min_point = out.witnesses[1].point;
        assert!((min_point.im.abs() - 1.0).abs() < 1e-2);
    }

    #[test]
    fn anti_calculus_constant_is_inconclusive() {
        let f = TruncatedSeries::polynomial_real(&[3.0, 0.0]).unwrap();
        let out = verify_anti_calculus(
            &DifferentiableSubject::Series(&f),
            1.0,
            64,
            &Tolerances::default(),
        )
        .unwrap();
        assert_eq!(out.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn boundary_max_for_the_square() {
        let f = TruncatedSeries::polynomial_real(&[0.0, 0.0, 1.0]).unwrap();
        let out = verify_boundary_max(
            |z| f.evaluate(z),
            1.0,
            512,
            256,
            &Tolerances::default(),
        )
        .unwrap();
        assert_eq!(out.verdict, Verdict::Pass);
        assert!(out.residual > 0.0);
    }

    #[test]
    fn boundary_max_for_translation_on_a_wide_disk() {
        let f = TruncatedSeries::polynomial_real(&[1.0, 1.0]).unwrap();
        let out = verify_boundary_max(
            |z| f.evaluate(z),
            2.0,
            512,
            256,
            &Tolerances::default(),
        )
        .unwrap();
        assert_eq!(out.verdict, Verdict::Pass);
        // Boundary max 3 at z = 2.
        assert!((out.witnesses[1].value - c(3.0, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn open_image_of_the_square() {
        // Image of |z| <= 1/2 under z^2 is the full disk of radius 1/4,
        // so delta = 1/4 and every target within 1/8 is attained.
        let out = verify_open_image(
            |z: ComplexScalar| z * z,
            0.5,
            16,
            64,
            7,
            &Tolerances::default(),
        )
        .unwrap();
        assert_eq!(out.verdict, Verdict::Pass);
        assert!((out.tolerance - 2.5e-4).abs() < 1e-12, "delta/1000 = {}", out.tolerance);
    }

    #[test]
    fn open_image_of_a_translation_is_exact() {
        let out = verify_open_image(
            |z: ComplexScalar| z + ComplexScalar::new(5.0, 0.0),
            1.0,
            16,
            64,
            11,
            &Tolerances::default(),
        )
        .unwrap();
        assert_eq!(out.verdict, Verdict::Pass);
        assert!(out.residual > -1e-12, "Newton lands exactly: {}", out.residual);
    }

    #[test]
    fn open_image_with_cubic_term() {
        let out = verify_open_image(
            |z: ComplexScalar| z * z * z + z,
            0.3,
            16,
            64,
            13,
            &Tolerances::default(),
        )
        .unwrap();
        assert_eq!(out.verdict, Verdict::Pass);
    }

    #[test]
    fn open_image_is_deterministic_in_the_seed() {
        let run = || {
            verify_open_image(|z: ComplexScalar| z * z + z, 0.4, 8, 32, 99, &Tolerances::default())
                .unwrap()
        };
        assert_eq!(run(), run());
    }
}
