//! Intersection posets and characteristic polynomials.

mod deletion_contraction;
mod finite_field;

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::arrangement::Arrangement;
use crate::exact_math::matrix::{reduce_against, rref_in_place};
use crate::exact_math::{Field, Polynomial, PrimeField, Rational, Rationals};

pub use deletion_contraction::chi_via_deletion_contraction;
#[cfg(feature = "parallel")]
pub use finite_field::count_complement_points_par;
pub use finite_field::{
    chi_via_finite_field, count_complement_points, count_complement_points_seq, good_primes, is_good_prime,
    FiniteFieldChi, DEFAULT_POINT_BUDGET,
};

/// A nonempty intersection of hyperplanes, identified by the reduced row
/// echelon form of its augmented defining system.
#[derive(Clone, Debug)]
pub struct Flat<E> {
    rows: Vec<Vec<E>>,
    pivots: Vec<usize>,
    dim: usize,
    generators: Vec<usize>,
    hyperplanes: Vec<usize>,
}

impl<E> Flat<E> {
    /// Nonzero rows of the RREF `[normals | offsets]` system.
    pub fn rows(&self) -> &[Vec<E>] {
        &self.rows
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn codim(&self) -> usize {
        self.rows.len()
    }

    /// Hyperplanes whose intersection was used to reach this flat.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Every hyperplane containing the flat, ascending.
    pub fn hyperplanes(&self) -> &[usize] {
        &self.hyperplanes
    }
}

/// `L(A)`: flats ordered by reverse inclusion. Index 0 is the ambient
/// space; flats are sorted by decreasing dimension.
#[derive(Clone, Debug)]
pub struct IntersectionPoset<E> {
    ambient_dim: usize,
    flats: Vec<Flat<E>>,
    below: Vec<Vec<usize>>,
    mobius: Vec<i64>,
}

impl<E: Clone + Eq + std::hash::Hash> IntersectionPoset<E> {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn flats(&self) -> &[Flat<E>] {
        &self.flats
    }

    pub fn flat(&self, i: usize) -> &Flat<E> {
        &self.flats[i]
    }

    /// Möbius value of every flat, indexed like [`Self::flats`].
    pub fn mobius(&self) -> &[i64] {
        &self.mobius
    }

    /// Flats strictly below `x`, i.e. strictly containing it.
    pub fn strictly_below(&self, x: usize) -> &[usize] {
        &self.below[x]
    }

    /// `x <= y` in `L(A)`, i.e. flat `y` is contained in flat `x`.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        x == y || self.below[y].contains(&x)
    }

    /// Index of the flat with the given RREF rows.
    pub fn find(&self, rows: &[Vec<E>]) -> Option<usize> {
        self.flats.iter().position(|f| f.rows == rows)
    }

    /// Number of flats of each dimension, indexed by dimension.
    pub fn dimension_profile(&self) -> Vec<usize> {
        let mut out = vec![0; self.ambient_dim + 1];
        for f in &self.flats {
            out[f.dim] += 1;
        }
        out
    }

    /// `Σ μ(X) t^dim(X)`.
    pub fn characteristic_polynomial(&self) -> Polynomial {
        let mut coeffs = vec![0i64; self.ambient_dim + 1];
        for (f, m) in self.flats.iter().zip(&self.mobius) {
            coeffs[f.dim] += m;
        }
        Polynomial::from_i64(&coeffs)
    }

    /// Coordinate-free description: each flat as (containing hyperplanes,
    /// codimension, Möbius value), sorted. Two posets over arrangements with
    /// the same hyperplane indexing are isomorphic through the identity on
    /// hyperplanes iff their signatures and [`Self::order_by_hyperplanes`]
    /// agree.
    pub fn signature(&self) -> Vec<(Vec<usize>, usize, i64)> {
        let mut sig: Vec<_> = self
            .flats
            .iter()
            .zip(&self.mobius)
            .map(|(f, &m)| (f.hyperplanes.clone(), f.codim(), m))
            .collect();
        sig.sort();
        sig
    }

    /// Strict order relation with flats named by their hyperplane sets.
    pub fn order_by_hyperplanes(&self) -> BTreeSet<(Vec<usize>, Vec<usize>)> {
        let mut out = BTreeSet::new();
        for (x, below) in self.below.iter().enumerate() {
            for &y in below {
                out.insert((self.flats[y].hyperplanes.clone(), self.flats[x].hyperplanes.clone()));
            }
        }
        out
    }
}

/// Builds `L(A)` over the rationals.
pub fn build_poset(a: &Arrangement) -> IntersectionPoset<Rational> {
    let rows: Vec<Vec<Rational>> = a.hyperplanes().iter().map(|h| h.augmented_row()).collect();
    build_poset_over(&Rationals, &rows, a.dim())
}

/// Builds the poset of the arrangement reduced modulo `p`, from the
/// primitive integer form of each hyperplane. Returns `None` when some
/// normal vanishes mod `p` (the reduction is not a hyperplane arrangement).
pub fn build_poset_mod_p(a: &Arrangement, field: &PrimeField) -> Option<IntersectionPoset<u64>> {
    let rows = reduce_mod_p(a, field);
    if rows.iter().any(|r| r[..a.dim()].iter().all(|&c| c == 0)) {
        return None;
    }
    Some(build_poset_over(field, &rows, a.dim()))
}

pub(crate) fn reduce_mod_p(a: &Arrangement, field: &PrimeField) -> Vec<Vec<u64>> {
    a.hyperplanes()
        .iter()
        .map(|h| h.integral_row().iter().map(|c| field.reduce(c)).collect())
        .collect()
}

/// Closure construction: start from the ambient space and intersect known
/// flats with single hyperplanes until nothing new appears. `rows` are the
/// augmented hyperplane equations, each of length `dim + 1`.
pub fn build_poset_over<F: Field>(field: &F, rows: &[Vec<F::Elem>], dim: usize) -> IntersectionPoset<F::Elem> {
    let cols = dim + 1;
    let contains = |flat_rows: &[Vec<F::Elem>], pivots: &[usize], h: &[F::Elem]| {
        reduce_against(field, flat_rows, pivots, h)
            .iter()
            .all(|v| field.is_zero(v))
    };

    let ambient = Flat {
        rows: Vec::new(),
        pivots: Vec::new(),
        dim,
        generators: Vec::new(),
        hyperplanes: Vec::new(),
    };
    let mut flats = vec![ambient];
    let mut index: HashMap<Vec<Vec<F::Elem>>, usize> = HashMap::new();
    index.insert(Vec::new(), 0);
    let mut queue = VecDeque::from([0usize]);

    while let Some(x) = queue.pop_front() {
        for (i, h) in rows.iter().enumerate() {
            if flats[x].hyperplanes.contains(&i) {
                continue;
            }
            let mut system = flats[x].rows.clone();
            system.push(h.clone());
            let pivots = rref_in_place(field, &mut system, cols);
            if pivots.last() == Some(&dim) {
                continue; // inconsistent: empty intersection
            }
            system.truncate(pivots.len());
            if index.contains_key(&system) {
                continue;
            }
            let hyperplanes = (0..rows.len())
                .filter(|&k| contains(&system, &pivots, &rows[k]))
                .collect();
            let mut generators = flats[x].generators.clone();
            generators.push(i);
            let flat = Flat {
                dim: dim - pivots.len(),
                rows: system.clone(),
                pivots,
                generators,
                hyperplanes,
            };
            index.insert(system, flats.len());
            queue.push_back(flats.len());
            flats.push(flat);
        }
    }

    // Stable sort keeps the ambient space first.
    flats.sort_by_key(|f| std::cmp::Reverse(f.dim));

    let n = flats.len();
    let mut below = vec![Vec::new(); n];
    for x in 0..n {
        for y in 0..n {
            if flats[y].dim <= flats[x].dim {
                continue;
            }
            // Y contains X iff every equation of Y holds on X; the
            // hyperplane sets give a cheap necessary condition first.
            if !is_subset(&flats[y].hyperplanes, &flats[x].hyperplanes) {
                continue;
            }
            if flats[y]
                .rows
                .iter()
                .all(|r| contains(&flats[x].rows, &flats[x].pivots, r))
            {
                below[x].push(y);
            }
        }
    }

    let mut mobius = vec![0i64; n];
    for x in 0..n {
        mobius[x] = if x == 0 {
            1
        } else {
            -below[x].iter().map(|&y| mobius[y]).sum::<i64>()
        };
    }

    IntersectionPoset {
        ambient_dim: dim,
        flats,
        below,
        mobius,
    }
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|s| it.any(|b| b == s))
}

/// `χ_A(t) = Σ_{X ∈ L(A)} μ(X) t^dim(X)`.
pub fn chi_via_mobius(a: &Arrangement) -> Polynomial {
    build_poset(a).characteristic_polynomial()
}
