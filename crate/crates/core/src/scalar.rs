//! Scalar type and small numeric helpers shared by every module.

use num_complex::Complex64;

/// The scalar every series, grid and verifier works over: complex numbers
/// with `f64` components.
pub type ComplexScalar = Complex64;

/// Returns true when both components are finite (no NaN, no infinity).
pub fn is_finite(z: ComplexScalar) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Principal `p`-th root: magnitude `|z|^(1/p)`, argument `arg(z)/p`.
///
/// Since the principal argument lies in `(-pi, pi]`, the result's argument
/// lies in `(-pi/p, pi/p]`.
pub fn principal_root(z: ComplexScalar, p: u32) -> ComplexScalar {
    assert!(p > 0, "root index must be positive");
    if z.norm() == 0.0 {
        return ComplexScalar::new(0.0, 0.0);
    }
    ComplexScalar::from_polar(z.norm().powf(1.0 / f64::from(p)), z.arg() / f64::from(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn principal_root_of_positive_real_is_real() {
        let r = principal_root(ComplexScalar::new(16.0, 0.0), 4);
        assert!((r.re - 2.0).abs() < 1e-12);
        assert!(r.im.abs() < 1e-12);
    }

    #[test]
    fn principal_root_argument_stays_in_sector() {
        // arg(-4) = pi, so the principal square root has argument pi/2.
        let r = principal_root(ComplexScalar::new(-4.0, 0.0), 2);
        assert!((r.re - 0.0).abs() < 1e-12);
        assert!((r.im - 2.0).abs() < 1e-12);
    }

    #[test]
    fn non_finite_detection() {
        assert!(is_finite(ComplexScalar::new(1.0, -2.0)));
        assert!(!is_finite(ComplexScalar::new(f64::NAN, 0.0)));
        assert!(!is_finite(ComplexScalar::new(0.0, f64::INFINITY)));
    }
}
