use num::ToPrimitive;
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{build_poset, build_poset_mod_p, reduce_mod_p, IntersectionPoset};
use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::exact_math::{int, is_prime, next_prime, Polynomial, PrimeField, Rational};

/// Largest `p^d` the brute-force point count will enumerate by default.
pub const DEFAULT_POINT_BUDGET: u64 = 10_000_000;

/// Result of the finite-field computation of `χ`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FiniteFieldChi {
    pub polynomial: Polynomial,
    pub primes: Vec<u64>,
    pub counts: Vec<u64>,
}

fn field_for(p: u64) -> Result<PrimeField> {
    PrimeField::new(p).ok_or_else(|| Error::InvalidInput(format!("{p} is not prime")))
}

/// Whether reducing mod `p` preserves the intersection poset, matching flats
/// by the sets of hyperplanes containing them.
pub fn is_good_prime(a: &Arrangement, p: u64) -> Result<bool> {
    let field = field_for(p)?;
    Ok(good_against(a, &build_poset(a), &field))
}

fn good_against(a: &Arrangement, real: &IntersectionPoset<Rational>, field: &PrimeField) -> bool {
    let Some(reduced) = build_poset_mod_p(a, field) else {
        return false;
    };
    real.len() == reduced.len()
        && real.dimension_profile() == reduced.dimension_profile()
        && real.signature() == reduced.signature()
        && real.order_by_hyperplanes() == reduced.order_by_hyperplanes()
}

fn point_total(p: u64, d: usize, budget: u64) -> Result<u64> {
    let too_large = Error::DimensionTooLarge { p, dim: d, budget };
    let exp = u32::try_from(d).map_err(|_| too_large.clone())?;
    match p.checked_pow(exp) {
        Some(total) if total <= budget => Ok(total),
        _ => Err(too_large),
    }
}

/// The `k` smallest good primes, searching upward from the smallest prime
/// exceeding both the largest integer coefficient and `d`.
pub fn good_primes(a: &Arrangement, k: usize, budget: u64) -> Result<Vec<u64>> {
    let d = a.dim();
    let start = a
        .max_integer_coefficient()
        .to_u64()
        .ok_or_else(|| Error::BudgetExceeded("coefficients too large for point counting".into()))?
        .max(d as u64);
    let real = build_poset(a);
    let mut primes = Vec::with_capacity(k);
    let mut p = next_prime(start);
    while primes.len() < k {
        if point_total(p, d, budget).is_err() {
            return Err(Error::BudgetExceeded(format!(
                "found {} of {k} good primes before p^{d} exceeded {budget}",
                primes.len()
            )));
        }
        if good_against(a, &real, &PrimeField::new(p).expect("prime")) {
            primes.push(p);
        }
        p = next_prime(p);
    }
    Ok(primes)
}

fn prepare(a: &Arrangement, p: u64, budget: u64) -> Result<Vec<Vec<u64>>> {
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    point_total(p, a.dim(), budget)?;
    Ok(reduce_mod_p(a, &field_for(p)?))
}

/// Points of `F_p^d` with first coordinate `x0` lying on no hyperplane.
/// Stepping one coordinate by 1 (including the wrap to 0) adds that column
/// of the normals to every running dot product.
fn count_slice(rows: &[Vec<u64>], p: u64, d: usize, x0: u64) -> u64 {
    let mut dots: Vec<u64> = rows.iter().map(|r| r[0] * x0 % p).collect();
    let mut x = vec![0u64; d];
    let mut count = 0;
    loop {
        if rows.iter().zip(&dots).all(|(r, &v)| v != r[d]) {
            count += 1;
        }
        let mut j = d - 1;
        loop {
            if j == 0 {
                return count;
            }
            for (r, v) in rows.iter().zip(dots.iter_mut()) {
                *v = (*v + r[j]) % p;
            }
            x[j] += 1;
            if x[j] < p {
                break;
            }
            x[j] = 0;
            j -= 1;
        }
    }
}

/// Brute-force count of the points of `F_p^d` off every hyperplane reduced
/// mod `p`, on a single thread.
pub fn count_complement_points_seq(a: &Arrangement, p: u64, budget: u64) -> Result<u64> {
    let rows = prepare(a, p, budget)?;
    if a.dim() == 0 {
        return Ok(1);
    }
    Ok((0..p).map(|x0| count_slice(&rows, p, a.dim(), x0)).sum())
}

/// As [`count_complement_points_seq`], splitting on the first coordinate.
#[cfg(feature = "parallel")]
pub fn count_complement_points_par(a: &Arrangement, p: u64, budget: u64) -> Result<u64> {
    let rows = prepare(a, p, budget)?;
    if a.dim() == 0 {
        return Ok(1);
    }
    Ok((0..p)
        .into_par_iter()
        .map(|x0| count_slice(&rows, p, a.dim(), x0))
        .sum())
}

pub fn count_complement_points(a: &Arrangement, p: u64, budget: u64) -> Result<u64> {
    #[cfg(feature = "parallel")]
    return count_complement_points_par(a, p, budget);
    #[cfg(not(feature = "parallel"))]
    return count_complement_points_seq(a, p, budget);
}

/// `χ_A` interpolated from complement counts at the `d + 1` smallest good
/// primes.
pub fn chi_via_finite_field(a: &Arrangement, budget: u64) -> Result<FiniteFieldChi> {
    let primes = good_primes(a, a.dim() + 1, budget)?;
    #[cfg(feature = "parallel")]
    let counts = primes
        .par_iter()
        .map(|&p| count_complement_points(a, p, budget))
        .collect::<Result<Vec<_>>>()?;
    #[cfg(not(feature = "parallel"))]
    let counts = primes
        .iter()
        .map(|&p| count_complement_points(a, p, budget))
        .collect::<Result<Vec<_>>>()?;
    let points: Vec<(Rational, Rational)> = primes
        .iter()
        .zip(&counts)
        .map(|(&p, &c)| (int(p as i64), Rational::from_integer(c.into())))
        .collect();
    let polynomial = Polynomial::interpolate(&points, a.dim())?;
    Ok(FiniteFieldChi {
        polynomial,
        primes,
        counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{make_family, FamilySpec, Hyperplane};
    use crate::poset::chi_via_mobius;
    use crate::poset::tests::three_lines;

    #[test]
    fn good_prime_examples() {
        assert!(is_good_prime(&three_lines(), 5).unwrap());
        let collide = Arrangement::new(
            1,
            vec![
                Hyperplane::from_i64(&[1], 0).unwrap(),
                Hyperplane::from_i64(&[1], 3).unwrap(),
            ],
        )
        .unwrap();
        assert!(!is_good_prime(&collide, 3).unwrap());
        assert!(is_good_prime(&collide, 5).unwrap());
        assert!(is_good_prime(&make_family(&FamilySpec::Braid(3)).unwrap(), 2).unwrap());
        assert!(matches!(is_good_prime(&three_lines(), 4), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn bad_prime_changes_poset() {
        // x + y = 1 and x - y = 1 meet at (1, 0); mod 2 they coincide.
        let a = Arrangement::new(
            2,
            vec![
                Hyperplane::from_i64(&[1, 1], 1).unwrap(),
                Hyperplane::from_i64(&[1, -1], 1).unwrap(),
            ],
        )
        .unwrap();
        assert!(!is_good_prime(&a, 2).unwrap());
        assert!(is_good_prime(&a, 3).unwrap());
    }

    #[test]
    fn count_examples() {
        let b = DEFAULT_POINT_BUDGET;
        assert_eq!(count_complement_points(&three_lines(), 5, b).unwrap(), 13);
        let braid = make_family(&FamilySpec::Braid(3)).unwrap();
        assert_eq!(count_complement_points(&braid, 5, b).unwrap(), 60);
        assert_eq!(count_complement_points(&Arrangement::empty(2), 3, b).unwrap(), 9);
        assert_eq!(count_complement_points_seq(&braid, 7, b).unwrap(), 7 * 6 * 5);
    }

    #[test]
    fn count_respects_budget() {
        let braid = make_family(&FamilySpec::Braid(5)).unwrap();
        assert_eq!(
            count_complement_points(&braid, 29, DEFAULT_POINT_BUDGET),
            Err(Error::DimensionTooLarge {
                p: 29,
                dim: 5,
                budget: DEFAULT_POINT_BUDGET
            })
        );
        assert!(count_complement_points(&braid, 7, 100).is_err());
    }

    #[test]
    fn interpolated_chi_examples() {
        let b = DEFAULT_POINT_BUDGET;
        let ff = chi_via_finite_field(&three_lines(), b).unwrap();
        assert_eq!(ff.polynomial, Polynomial::from_i64(&[3, -3, 1]));
        assert_eq!(ff.primes.len(), 3);
        let cat = make_family(&FamilySpec::Catalan(2)).unwrap();
        assert_eq!(
            chi_via_finite_field(&cat, b).unwrap().polynomial,
            Polynomial::from_i64(&[0, -3, 1])
        );
        let lin = make_family(&FamilySpec::Linial(3)).unwrap();
        assert_eq!(chi_via_finite_field(&lin, b).unwrap().polynomial, chi_via_mobius(&lin));
    }

    #[test]
    fn budget_exceeded_when_primes_run_out() {
        let braid = make_family(&FamilySpec::Braid(4)).unwrap();
        assert!(matches!(
            chi_via_finite_field(&braid, 1000),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn rational_data_is_integralized() {
        let a = crate::arrangement::parse_arrangement("dim 2\n1/2 1/3 | 1\n1 0 | 1/2\n").unwrap();
        let ff = chi_via_finite_field(&a, DEFAULT_POINT_BUDGET).unwrap();
        assert_eq!(ff.polynomial, chi_via_mobius(&a));
    }
}
