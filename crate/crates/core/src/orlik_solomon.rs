//! The Orlik–Solomon algebra `E(A) / I_A` as a graded vector space over
//! the rationals.
//!
//! Monomials `H_{i1} ⋯ H_{ik}` with `i1 < ... < ik` are bitmasks.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{One, Signed, Zero};

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::exact_math::matrix::rank_of;
use crate::exact_math::{Polynomial, Rational, Rationals};
use crate::poset::chi_via_mobius;

pub type Monomial = u32;

pub const MAX_OS_HYPERPLANES: usize = 12;

pub fn degree(m: Monomial) -> usize {
    m.count_ones() as usize
}

fn indices(m: Monomial) -> Vec<usize> {
    (0..32).filter(|&i| m >> i & 1 == 1).collect()
}

/// A linear combination of monomials of the exterior algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExteriorElement {
    terms: BTreeMap<Monomial, Rational>,
}

impl ExteriorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub fn from_indices(idx: &[usize]) -> Self {
        Self::monomial(idx.iter().fold(0, |m, &i| m | 1 << i))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn coeff(&self, m: Monomial) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// `e_S · self`, using `H_i H_j = -H_j H_i` and `H_i^2 = 0`.
    pub fn left_multiply(&self, s: Monomial) -> Self {
        let mut out = Self::zero();
        for (&t, c) in &self.terms {
            if s & t != 0 {
                continue;
            }
            // Moving each factor of T left past the larger factors of S.
            let swaps: u32 = indices(t).iter().map(|&j| (s >> (j + 1)).count_ones()).sum();
            let c = if swaps % 2 == 1 { -c } else { c.clone() };
            out.add_term(s | t, c);
        }
        out
    }

    fn sub_scaled(&mut self, other: &Self, f: &Rational) {
        for (&m, c) in &other.terms {
            self.add_term(m, -(f * c));
        }
    }
}

impl fmt::Display for ExteriorElement {
    /// Hyperplanes print as `a, b, c, ...` (then `H27, H28, ...`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let name = |i: usize| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("H{}", i + 1)
            }
        };
        for (k, (&m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let word: String = indices(m).into_iter().map(name).collect();
            if word.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&word)?;
            } else {
                write!(f, "{mag}{word}")?;
            }
        }
        Ok(())
    }
}

/// `∂(H_{i1} ⋯ H_{ik}) = Σ_j (-1)^j H_{i1} ⋯ Ĥ_{ij} ⋯ H_{ik}`, `j` from 1.
pub fn boundary(m: Monomial) -> ExteriorElement {
    let mut out = ExteriorElement::zero();
    for (pos, i) in indices(m).into_iter().enumerate() {
        let c = if pos % 2 == 0 {
            -Rational::one()
        } else {
            Rational::one()
        };
        out.add_term(m & !(1 << i), c);
    }
    out
}

fn check_size(a: &Arrangement) -> Result<()> {
    if a.len() > MAX_OS_HYPERPLANES {
        return Err(Error::BudgetExceeded(format!(
            "{} hyperplanes exceeds the Orlik-Solomon limit of {MAX_OS_HYPERPLANES}",
            a.len()
        )));
    }
    Ok(())
}

/// A generator of `I_A` and the subset it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealGenerator {
    pub subset: Monomial,
    pub empty_intersection: bool,
    pub element: ExteriorElement,
}

/// One generator per qualifying subset: the monomial itself when the
/// hyperplanes have empty intersection, otherwise `∂` of it when their
/// normals are dependent.
pub fn ideal_generators(a: &Arrangement) -> Result<Vec<IdealGenerator>> {
    check_size(a)?;
    let n = a.len();
    let d = a.dim();
    let mut out = Vec::new();
    for s in 1u32..(1 << n) {
        let idx = indices(s);
        let augmented: Vec<Vec<Rational>> = idx.iter().map(|&i| a.hyperplane(i).augmented_row()).collect();
        let normals: Vec<Vec<Rational>> = idx.iter().map(|&i| a.hyperplane(i).normal().to_vec()).collect();
        let normal_rank = rank_of(&Rationals, &normals, d);
        let empty = rank_of(&Rationals, &augmented, d + 1) > normal_rank;
        if empty {
            out.push(IdealGenerator {
                subset: s,
                empty_intersection: true,
                element: ExteriorElement::monomial(s),
            });
        } else if normal_rank < idx.len() {
            out.push(IdealGenerator {
                subset: s,
                empty_intersection: false,
                element: boundary(s),
            });
        }
    }
    Ok(out)
}

/// Rows in echelon form keyed by their leading (smallest) monomial, each
/// scaled to leading coefficient 1.
#[derive(Clone, Debug, Default)]
struct Echelon {
    rows: HashMap<Monomial, ExteriorElement>,
}

impl Echelon {
    fn reduce(&self, v: &ExteriorElement) -> ExteriorElement {
        let mut v = v.clone();
        let mut floor = 0u32;
        loop {
            let Some((&m, c)) = v.terms.range(floor..).next() else {
                return v;
            };
            match self.rows.get(&m) {
                Some(row) => {
                    let c = c.clone();
                    v.sub_scaled(row, &c);
                }
                None => floor = m + 1,
            }
        }
    }

    /// Adds `v` if it is independent of the rows. Reduction leaves no pivot
    /// monomials in `v`, so its smallest monomial becomes the new pivot.
    fn insert(&mut self, v: &ExteriorElement) -> bool {
        let mut v = self.reduce(v);
        let Some((&lead, c)) = v.terms.iter().next() else {
            return false;
        };
        let inv = Rational::one() / c;
        for c in v.terms.values_mut() {
            *c *= &inv;
        }
        self.rows.insert(lead, v);
        true
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// `OS(A)` degree by degree.
#[derive(Clone, Debug)]
pub struct OrlikSolomon {
    n: usize,
    dims: Vec<usize>,
    ideal: Vec<Echelon>,
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

impl OrlikSolomon {
    /// `I_k` is spanned by `H_i · I_{k-1}` and the generators of degree `k`.
    /// Once `OS_k = 0` every higher degree vanishes too, since `OS(A)` is
    /// generated in degree 1.
    pub fn compute(a: &Arrangement) -> Result<Self> {
        let n = a.len();
        let generators = ideal_generators(a)?;
        let mut by_degree: Vec<Vec<ExteriorElement>> = vec![Vec::new(); n + 1];
        for g in generators {
            let deg = if g.empty_intersection {
                degree(g.subset)
            } else {
                degree(g.subset) - 1
            };
            by_degree[deg].push(g.element);
        }

        let mut dims = Vec::new();
        let mut ideal: Vec<Echelon> = Vec::new();
        for (k, gens) in by_degree.iter().enumerate() {
            let mut ik = Echelon::default();
            if let Some(prev) = ideal.last() {
                for row in prev.rows.values() {
                    for i in 0..n {
                        ik.insert(&row.left_multiply(1 << i));
                    }
                }
            }
            for g in gens {
                ik.insert(g);
            }
            let dim = binomial(n, k) - ik.rank();
            ideal.push(ik);
            if dim == 0 {
                break;
            }
            dims.push(dim);
        }
        Ok(Self { n, dims, ideal })
    }

    /// `dim OS_k` for `k = 0..`, up to the last nonzero degree.
    pub fn graded_dimensions(&self) -> &[usize] {
        &self.dims
    }

    /// Whether a homogeneous element lies in `I_A`.
    pub fn in_ideal(&self, v: &ExteriorElement) -> bool {
        let Some(&m) = v.terms.keys().next() else {
            return true;
        };
        let k = degree(m);
        assert!(v.terms.keys().all(|&t| degree(t) == k), "element is not homogeneous");
        match self.ideal.get(k) {
            Some(ik) => ik.reduce(v).is_zero(),
            None => k <= self.n,
        }
    }

    pub fn hilbert_polynomial(&self) -> Polynomial {
        Polynomial::from_i64(&self.dims.iter().map(|&d| d as i64).collect::<Vec<_>>())
    }
}

pub fn graded_dimensions(a: &Arrangement) -> Result<Vec<usize>> {
    Ok(OrlikSolomon::compute(a)?.graded_dimensions().to_vec())
}

/// `(-x)^d χ(-1/x)`: the coefficient of `x^k` is `|coefficient of t^(d-k)|`.
/// Without the sign the identity fails in odd dimension (`χ = t - 1`).
pub fn hilbert_from_chi(chi: &Polynomial, d: usize) -> Polynomial {
    let h = chi.reciprocal_alternating(d);
    if d % 2 == 1 {
        -&h
    } else {
        h
    }
}

/// Hilbert polynomial of `OS(A)` from its graded dimensions, checked
/// against [`hilbert_from_chi`].
pub fn hilbert_polynomial(a: &Arrangement) -> Result<Polynomial> {
    let hilb = OrlikSolomon::compute(a)?.hilbert_polynomial();
    let expected = hilbert_from_chi(&chi_via_mobius(a), a.dim());
    if hilb != expected {
        return Err(Error::CrossCheck(format!(
            "Hilbert polynomial {hilb} differs from (-x)^d chi(-1/x) = {expected}"
        )));
    }
    Ok(hilb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{make_family, FamilySpec, Hyperplane};
    use crate::exact_math::int;

    fn os_example() -> Arrangement {
        Arrangement::new(
            2,
            vec![
                Hyperplane::from_i64(&[1, 0], 0).unwrap(),
                Hyperplane::from_i64(&[0, 1], 0).unwrap(),
                Hyperplane::from_i64(&[1, 1], 0).unwrap(),
                Hyperplane::from_i64(&[1, -1], 1).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(boundary(0b111).to_string(), "-ab + ac - bc");
        assert_eq!(boundary(0b1), ExteriorElement::term(0, int(-1)));
        assert_eq!(boundary(0b11).to_string(), "a - b");
    }

    #[test]
    fn boundary_squares_to_zero() {
        for m in 1u32..64 {
            let b = boundary(m);
            let mut bb = ExteriorElement::zero();
            for (&t, c) in b.terms() {
                for (&u, e) in boundary(t).terms() {
                    bb.add_term(u, c * e);
                }
            }
            assert!(bb.is_zero(), "{m:b}");
        }
    }

    #[test]
    fn anticommutation() {
        let b = ExteriorElement::monomial(0b10);
        assert_eq!(b.left_multiply(0b1), ExteriorElement::monomial(0b11));
        let a = ExteriorElement::monomial(0b1);
        assert_eq!(a.left_multiply(0b10), ExteriorElement::term(0b11, int(-1)));
        assert!(a.left_multiply(0b1).is_zero());
    }

    #[test]
    fn example_generators() {
        let gens = ideal_generators(&os_example()).unwrap();
        let shown: Vec<String> = gens.iter().map(|g| g.element.to_string()).collect();
        for expected in ["abd", "acd", "bcd", "-ab + ac - bc"] {
            assert!(
                shown.contains(&expected.to_string()),
                "{expected} missing from {shown:?}"
            );
        }
    }

    #[test]
    fn generic_has_no_small_dependencies() {
        let a = make_family(&FamilySpec::Generic { n: 5, d: 3 }).unwrap();
        for g in ideal_generators(&a).unwrap() {
            if !g.empty_intersection {
                assert!(degree(g.subset) > 3);
            }
        }
    }

    #[test]
    fn graded_dimension_examples() {
        assert_eq!(graded_dimensions(&os_example()).unwrap(), vec![1, 4, 5]);
        assert_eq!(graded_dimensions(&Arrangement::empty(3)).unwrap(), vec![1]);
        let braid = make_family(&FamilySpec::Braid(3)).unwrap();
        assert_eq!(graded_dimensions(&braid).unwrap(), vec![1, 3, 2]);
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(
            hilbert_polynomial(&os_example()).unwrap(),
            Polynomial::from_i64(&[1, 4, 5])
        );
        let line = Arrangement::new(1, vec![Hyperplane::from_i64(&[1], 0).unwrap()]).unwrap();
        assert_eq!(hilbert_polynomial(&line).unwrap(), Polynomial::from_i64(&[1, 1]));
        assert_eq!(hilbert_polynomial(&os_example()).unwrap().eval_i64(1), int(10));
    }

    #[test]
    fn generators_lie_in_ideal() {
        let a = make_family(&FamilySpec::Shi(3)).unwrap();
        let os = OrlikSolomon::compute(&a).unwrap();
        for g in ideal_generators(&a).unwrap() {
            assert!(os.in_ideal(&g.element));
        }
        assert!(!os.in_ideal(&ExteriorElement::monomial(0b1)));
    }

    #[test]
    fn budget() {
        let a = make_family(&FamilySpec::Catalan(4)).unwrap();
        assert!(matches!(graded_dimensions(&a), Err(Error::BudgetExceeded(_))));
    }
}
