//! Unit-disk rigidity checks: the Schwarz bound `|f(z)| <= |z|` with its
//! coefficient-energy form `sum |a_n|^2 <= 1`, and the boundary-maximum
//! quantity `alpha f'(alpha) / f(alpha)` which must be real, non-negative,
//! and at least 1 when f fixes the origin.

use crate::scalar::ComplexScalar;
use crate::series::TruncatedSeries;

use super::{
    check_samples, circle_node, CheckResult, DifferentiableSubject, Tolerances, VerifyError,
    Witness,
};

/// Schwarz check for `f` with `f(0) = 0` and sampled `|f| <= 1` on the unit
/// disk: asserts the coefficient energy bound `sum_{n>=1} |a_n|^2 <= 1` and
/// the pointwise bound `|f(z)| <= |z|` on a radial-angular grid.
///
/// Equality structure is classified in the notes: a coefficient of modulus
/// ~1 means `f` is a rotation-monomial `omega z^n`, and a sampled interior
/// equality `|f(z)| = |z|`, `z != 0`, means a rotation `omega z`.
pub fn verify_schwarz(
    f: &TruncatedSeries,
    samples: usize,
    tol: &Tolerances,
) -> Result<CheckResult, VerifyError> {
    check_samples(8, samples)?;
    if f.center().norm() > tol.zero {
        return Err(VerifyError::CenterNotOrigin);
    }
    if f.coeff(0).norm() > tol.zero {
        return Err(VerifyError::ConstantTermNotZero);
    }

    let rings = 16usize;
    let angles = (samples / rings).max(8);

    // One sweep collects the sup (hypothesis), the tightest pointwise slack,
    // and any interior equality point.
    let mut sup = 0.0f64;
    let mut sup_arg = ComplexScalar::new(0.0, 0.0);
    let mut min_slack = f64::INFINITY;
    let mut tight = ComplexScalar::new(0.0, 0.0);
    let mut tight_val = ComplexScalar::new(0.0, 0.0);
    let mut interior_equality: Option<ComplexScalar> = None;
    for k in 1..=rings {
        let rho = k as f64 / rings as f64;
        for s in 0..angles {
            let z = circle_node(rho, s, angles);
            let v = f.evaluate(z);
            let m = v.norm();
            if m > sup {
                sup = m;
                sup_arg = z;
            }
            let slack = rho - m;
            if slack < min_slack {
                min_slack = slack;
                tight = z;
                tight_val = v;
            }
            if k < rings && slack <= tol.sampled && interior_equality.is_none() {
                interior_equality = Some(z);
            }
        }
    }
    if sup > 1.0 + tol.sampled {
        return Ok(CheckResult::inconclusive(
            "schwarz",
            format!("sampled sup {sup:.6e} exceeds 1: hypothesis unsupported"),
        )
        .with_witness(Witness::new(sup_arg, f.evaluate(sup_arg))));
    }

    let energy: f64 = f.coeffs().iter().skip(1).map(|c| c.norm_sqr()).sum();
    let residual = (1.0 - energy).min(min_slack);
    let mut out = CheckResult::from_slack("schwarz", residual, tol.sampled)
        .with_witness(Witness::new(tight, tight_val))
        .with_note(format!("coefficient energy {energy:.12}"));
    for (n, c) in f.coeffs().iter().enumerate().skip(1) {
        if c.norm() >= 1.0 - tol.sampled {
            out = out.with_note(format!(
                "rotation-monomial case: f = omega z^{n} with omega = {c}"
            ));
        }
    }
    if let Some(z) = interior_equality {
        out = out.with_note(format!("rotation case: |f(z)| = |z| at interior z = {z}"));
    }
    Ok(out)
}

/// Boundary-maximum quantity check at `|alpha| = 1`: computes
/// `q = alpha f'(alpha) / f(alpha)` and asserts `Im q = 0`, `Re q >= 0`,
/// and `Re q >= 1` when additionally `f(0) = 0`.
///
/// `alpha` must be a sampled boundary maximum of `|f|`; when the angular
/// grid places the maximum elsewhere beyond a Lipschitz-based grid
/// tolerance, the check is inconclusive. `q` is recorded as the witness
/// value at the point `alpha`.
pub fn clunie_jack(
    subject: &DifferentiableSubject<'_>,
    alpha: ComplexScalar,
    tol: &Tolerances,
) -> Result<CheckResult, VerifyError> {
    if (alpha.norm() - 1.0).abs() > tol.zero {
        return Err(VerifyError::NotOnUnitCircle);
    }
    let v = subject.value(alpha);
    if v.norm() <= tol.zero {
        return Err(VerifyError::DegenerateBoundaryValue);
    }

    let grid = 512usize;
    let mut grid_max = 0.0f64;
    let mut grid_arg = alpha;
    let mut lipschitz = 0.0f64;
    let mut prev: Option<(ComplexScalar, ComplexScalar)> = None;
    let mut first: Option<(ComplexScalar, ComplexScalar)> = None;
    for s in 0..grid {
        let z = circle_node(1.0, s, grid);
        let w = subject.value(z);
        if w.norm() > grid_max {
            grid_max = w.norm();
            grid_arg = z;
        }
        if let Some((pz, pw)) = prev {
            lipschitz = lipschitz.max((w - pw).norm() / (z - pz).norm());
        } else {
            first = Some((z, w));
        }
        prev = Some((z, w));
    }
    if let (Some((fz, fw)), Some((lz, lw))) = (first, prev) {
        lipschitz = lipschitz.max((fw - lw).norm() / (fz - lz).norm());
    }
    let guard = lipschitz * std::f64::consts::TAU / grid as f64 + tol.sampled * 1.0f64.max(v.norm());
    if grid_max > v.norm() + guard {
        return Ok(CheckResult::inconclusive(
            "clunie_jack",
            format!(
                "grid maximum {grid_max:.6e} at {grid_arg} exceeds |f(alpha)| = {:.6e}: \
                 alpha is not the sampled boundary maximum",
                v.norm()
            ),
        )
        .with_witness(Witness::new(grid_arg, subject.value(grid_arg))));
    }

    let q = alpha * subject.derivative_at(alpha) / v;
    let at_origin = subject.value(ComplexScalar::new(0.0, 0.0));
    let fixes_origin = at_origin.norm() <= tol.zero;
    let mut residual = (-q.im.abs()).min(q.re);
    if fixes_origin {
        residual = residual.min(q.re - 1.0);
    }
    let tolerance = subject.derivative_tolerance(tol) * 1.0f64.max(q.norm());
    let mut out = CheckResult::from_slack("clunie_jack", residual, tolerance)
        .with_witness(Witness::new(alpha, q))
        .with_note("witness value is q = alpha f'(alpha) / f(alpha)")
        .with_note(subject.derivative_note());
    if fixes_origin {
        out = out.with_note("f(0) = 0: the bound Re q >= 1 applies");
    }
    Ok(out)
}
