use num::BigInt;

use crate::exact_math::{int, Polynomial, Rational};

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

/// `χ(t) = (t / 2^n) Σ_k binom(n, k) (t - k)^(n-1)` for the arrangement
/// `x_i - x_j = 1`.
pub fn linial_chi_formula(n: usize) -> Polynomial {
    assert!(n >= 1);
    let mut sum = Polynomial::zero();
    for k in 0..=n {
        let term = Polynomial::linear(int(k as i64)).pow(n - 1).scale(&int(binomial(n, k)));
        sum = &sum + &term;
    }
    let scale = Rational::new(BigInt::from(1), BigInt::from(1) << n);
    &Polynomial::monomial(1) * &sum.scale(&scale)
}

/// `(1 / 2^n) Σ_k binom(n, k) (k + 1)^(n-1)`.
pub fn linial_region_formula(n: usize) -> Rational {
    let sum: BigInt = (0..=n)
        .map(|k| BigInt::from(binomial(n, k)) * BigInt::from(k + 1).pow(n as u32 - 1))
        .sum();
    Rational::new(sum, BigInt::from(1) << n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        // One hyperplane in R^2.
        assert_eq!(linial_chi_formula(2), Polynomial::from_i64(&[0, -1, 1]));
        assert_eq!(linial_region_formula(3), int(7));
        assert_eq!(linial_region_formula(1), int(1));
        assert_eq!(linial_region_formula(2), int(2));
    }
}
