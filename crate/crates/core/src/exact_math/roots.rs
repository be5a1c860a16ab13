//! Floating-point roots of exact polynomials. This is the only place in the
//! crate where rationals are converted to `f64`.

use nalgebra::{Complex, DMatrix};

use super::field::to_f64;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

const POLISH_STEPS: usize = 8;

/// All complex roots of `p`, with multiplicity, from the eigenvalues of the
/// companion matrix followed by a few Newton steps on the original
/// coefficients. Sorted by real part, then imaginary part.
pub fn poly_roots_numeric(p: &Polynomial) -> Result<Vec<Complex<f64>>> {
    let Some(deg) = p.degree() else {
        return Err(Error::ZeroPolynomial);
    };
    if deg == 0 {
        return Err(Error::InvalidInput("root finding needs degree at least 1".into()));
    }
    let coeffs: Vec<f64> = p.coeffs().iter().map(to_f64).collect();
    let lead = coeffs[deg];
    let mut companion = DMatrix::<f64>::zeros(deg, deg);
    for i in 1..deg {
        companion[(i, i - 1)] = 1.0;
    }
    for i in 0..deg {
        companion[(i, deg - 1)] = -coeffs[i] / lead;
    }
    let mut roots: Vec<Complex<f64>> = companion
        .complex_eigenvalues()
        .iter()
        .map(|&z| polish(&coeffs, z))
        .collect();
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(roots)
}

/// `p(z)` and `p'(z)` by Horner's scheme.
pub fn eval_complex(coeffs: &[f64], z: Complex<f64>) -> (Complex<f64>, Complex<f64>) {
    let mut value = Complex::new(0.0, 0.0);
    let mut deriv = Complex::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        deriv = deriv * z + value;
        value = value * z + c;
    }
    (value, deriv)
}

fn polish(coeffs: &[f64], mut z: Complex<f64>) -> Complex<f64> {
    for _ in 0..POLISH_STEPS {
        let (v, d) = eval_complex(coeffs, z);
        if d.norm() == 0.0 || v.norm() == 0.0 {
            break;
        }
        let next = z - v / d;
        // Keep the eigenvalue if Newton wanders (clustered roots).
        if eval_complex(coeffs, next).0.norm() > v.norm() {
            break;
        }
        z = next;
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::field::int;

    fn max_coeff(p: &Polynomial) -> f64 {
        p.coeffs().iter().map(|c| to_f64(c).abs()).fold(0.0, f64::max)
    }

    #[test]
    fn quadratic_roots() {
        // t^2 - 3t + 3 -> 3/2 ± (√3/2) i
        let p = Polynomial::from_i64(&[3, -3, 1]);
        let roots = poly_roots_numeric(&p).unwrap();
        assert_eq!(roots.len(), 2);
        let half_sqrt3 = 3f64.sqrt() / 2.0;
        assert!((roots[0].re - 1.5).abs() < 1e-12);
        assert!((roots[0].im + half_sqrt3).abs() < 1e-12);
        assert!((roots[1].im - half_sqrt3).abs() < 1e-12);
    }

    #[test]
    fn linear_root() {
        let roots = poly_roots_numeric(&Polynomial::linear(int(4))).unwrap();
        assert_eq!(roots.len(), 1);
        assert!((roots[0].re - 4.0).abs() < 1e-12 && roots[0].im.abs() < 1e-12);
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert!(matches!(
            poly_roots_numeric(&Polynomial::zero()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn factored_polynomials_recover_roots() {
        // (t - 1)(t - 2)(t + 3)(t - 5)(t - 1/2) built exactly.
        let expected = [-3.0, 0.5, 1.0, 2.0, 5.0];
        let p = [int(1), int(2), int(-3), int(5), crate::exact_math::field::ratio(1, 2)]
            .into_iter()
            .fold(Polynomial::constant(int(1)), |acc, r| &acc * &Polynomial::linear(r));
        let roots = poly_roots_numeric(&p).unwrap();
        let coeffs: Vec<f64> = p.coeffs().iter().map(to_f64).collect();
        for (r, e) in roots.iter().zip(expected) {
            assert!((r.re - e).abs() < 1e-9, "{r} vs {e}");
            assert!(r.im.abs() < 1e-9);
            assert!(eval_complex(&coeffs, *r).0.norm() < 1e-9 * max_coeff(&p));
        }
    }
}
