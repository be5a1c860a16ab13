use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::field::{int, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial with rational coefficients; `coeffs[k]` is
/// the coefficient of `t^k`. Trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Polynomial {
    #[serde(with = "super::serde_rational::vec")]
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `t^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        Self { coeffs }
    }

    /// `t - root`.
    pub fn linear(root: Rational) -> Self {
        Self::new(vec![-root, Rational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_i64(&self, t: i64) -> Rational {
        self.eval(&int(t))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, exp: usize) -> Self {
        (0..exp).fold(Self::constant(Rational::one()), |acc, _| &acc * self)
    }

    /// Exact division by `t`; `None` if the constant term is nonzero.
    pub fn div_by_t(&self) -> Option<Self> {
        match self.coeffs.first() {
            None => Some(Self::zero()),
            Some(c) if c.is_zero() => Some(Self::new(self.coeffs[1..].to_vec())),
            Some(_) => None,
        }
    }

    /// `x^deg · p(-1/x)` for `deg >= degree(p)`: reverses the coefficient
    /// list and alternates signs. Used to compare Hilbert series with the
    /// characteristic polynomial.
    pub fn reciprocal_alternating(&self, deg: usize) -> Self {
        assert!(self.degree().is_none_or(|d| d <= deg));
        let coeffs = (0..=deg)
            .map(|k| {
                let c = self.coeff(deg - k);
                if (deg - k) % 2 == 1 {
                    -c
                } else {
                    c
                }
            })
            .collect();
        Self::new(coeffs)
    }

    /// Unique interpolating polynomial of degree at most `degree` through
    /// `degree + 1` points, by exact Lagrange interpolation.
    pub fn interpolate(points: &[(Rational, Rational)], degree: usize) -> Result<Self> {
        if points.len() != degree + 1 {
            return Err(Error::InvalidInput(format!(
                "interpolation of degree {degree} needs {} points, got {}",
                degree + 1,
                points.len()
            )));
        }
        for (i, (xi, _)) in points.iter().enumerate() {
            if points[..i].iter().any(|(xj, _)| xj == xi) {
                return Err(Error::DuplicateAbscissa(xi.to_string()));
            }
        }
        let mut acc = Self::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = Self::constant(Rational::one());
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    basis = &basis * &Self::linear(xj.clone());
                    denom *= xi - xj;
                }
            }
            acc = &acc + &basis.scale(&(yi / denom));
        }
        Ok(acc)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Renders in the variable `t`, highest degree first: `t^2 - 3t + 3`.
/// Non-integer coefficients are parenthesised: `(1/2)t`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let unit = mag.is_one();
            match (k, unit, mag.is_integer()) {
                (0, _, true) => write!(f, "{mag}")?,
                (0, _, false) => write!(f, "({mag})")?,
                (_, true, _) => {}
                (_, false, true) => write!(f, "{mag}")?,
                (_, false, false) => write!(f, "({mag})")?,
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::field::ratio;
    use proptest::prelude::*;

    #[test]
    fn display() {
        assert_eq!(Polynomial::from_i64(&[3, -3, 1]).to_string(), "t^2 - 3t + 3");
        assert_eq!(Polynomial::from_i64(&[0, 9, -6, 1]).to_string(), "t^3 - 6t^2 + 9t");
        assert_eq!(Polynomial::from_i64(&[-1]).to_string(), "-1");
        assert_eq!(Polynomial::zero().to_string(), "0");
        let half = Polynomial::new(vec![ratio(1, 2), ratio(-3, 2)]);
        assert_eq!(half.to_string(), "-(3/2)t + (1/2)");
    }

    #[test]
    fn degree_and_trim() {
        assert_eq!(Polynomial::from_i64(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(Polynomial::from_i64(&[0, 0]).degree(), None);
    }

    #[test]
    fn interpolation_examples() {
        // (0,3), (1,1), (2,1) -> t^2 - 3t + 3.
        let pts = vec![(int(0), int(3)), (int(1), int(1)), (int(2), int(1))];
        assert_eq!(
            Polynomial::interpolate(&pts, 2).unwrap(),
            Polynomial::from_i64(&[3, -3, 1])
        );
        let one = Polynomial::interpolate(&[(int(5), int(1))], 0).unwrap();
        assert_eq!(one, Polynomial::from_i64(&[1]));
        let zeros = vec![(int(0), int(0)), (int(1), int(0)), (int(2), int(0))];
        assert!(Polynomial::interpolate(&zeros, 2).unwrap().is_zero());
    }

    #[test]
    fn duplicate_abscissa_rejected() {
        let pts = vec![(int(1), int(3)), (int(1), int(4))];
        assert!(matches!(
            Polynomial::interpolate(&pts, 1),
            Err(Error::DuplicateAbscissa(_))
        ));
    }

    #[test]
    fn reciprocal_alternating_matches_hilbert_identity() {
        // chi = t^2 - 4t + 5  ->  x^2 chi(-1/x) = 1 + 4x + 5x^2
        let chi = Polynomial::from_i64(&[5, -4, 1]);
        assert_eq!(chi.reciprocal_alternating(2), Polynomial::from_i64(&[1, 4, 5]));
    }

    proptest! {
        #[test]
        fn interpolate_inverts_evaluation(
            coeffs in prop::collection::vec((-9i64..10, 1i64..6), 0..6),
            xs in prop::collection::btree_set(-20i64..20, 6),
        ) {
            let p = Polynomial::new(coeffs.into_iter().map(|(n, d)| ratio(n, d)).collect());
            let pts: Vec<_> = xs.into_iter().map(|x| (int(x), p.eval_i64(x))).collect();
            prop_assert_eq!(Polynomial::interpolate(&pts, 5).unwrap(), p);
        }
    }
}
