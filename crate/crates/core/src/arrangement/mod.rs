//! Affine hyperplane arrangements over the rationals.

mod families;
mod io;
mod random;

use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;
use num::{BigInt, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_math::field::{primitive_integer_vector, Rational, Rationals};
use crate::exact_math::matrix::{rank_of, RationalMatrix};

pub use families::{catalan_index, make_family, shi_index, FamilySpec};
pub use io::{format_arrangement, parse_arrangement};
pub use random::{random_arrangement, random_graph};

/// The hyperplane `{x : normal · x = offset}`, scaled so that the first
/// nonzero entry of `normal` is 1. Two hyperplanes are equal as sets iff
/// their stored records are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Hyperplane {
    #[serde(with = "crate::exact_math::serde_rational::vec")]
    normal: Vec<Rational>,
    #[serde(with = "crate::exact_math::serde_rational")]
    offset: Rational,
}

impl Hyperplane {
    pub fn new(normal: Vec<Rational>, offset: Rational) -> Result<Self> {
        let Some(lead) = normal.iter().find(|c| !c.is_zero()).cloned() else {
            return Err(Error::ZeroNormal);
        };
        Ok(Self {
            normal: normal.iter().map(|c| c / &lead).collect(),
            offset: offset / lead,
        })
    }

    pub fn from_i64(normal: &[i64], offset: i64) -> Result<Self> {
        Self::new(
            normal.iter().map(|&c| crate::exact_math::int(c)).collect(),
            crate::exact_math::int(offset),
        )
    }

    pub fn normal(&self) -> &[Rational] {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// Index of the leading 1 in the normal.
    pub fn pivot(&self) -> usize {
        self.normal
            .iter()
            .position(|c| !c.is_zero())
            .expect("canonical normal is nonzero")
    }

    /// `normal · x - offset`.
    pub fn evaluate(&self, x: &[Rational]) -> Rational {
        let dot: Rational = self.normal.iter().zip(x).map(|(v, xi)| v * xi).sum();
        dot - &self.offset
    }

    /// Augmented row `[normal | offset]`.
    pub fn augmented_row(&self) -> Vec<Rational> {
        let mut row = self.normal.clone();
        row.push(self.offset.clone());
        row
    }

    /// Primitive integer form of the augmented row (normal then offset).
    pub fn integral_row(&self) -> Vec<BigInt> {
        primitive_integer_vector(&self.augmented_row())
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.normal.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "x{}", j + 1)?;
        }
        write!(f, "={}", self.offset)
    }
}

/// A finite list of distinct hyperplanes in `R^dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrangement {
    dim: usize,
    hyperplanes: Vec<Hyperplane>,
    labels: Vec<String>,
}

impl Arrangement {
    /// Builds an arrangement, labelling each hyperplane by its equation.
    /// Repeated hyperplanes are rejected.
    pub fn new(dim: usize, hyperplanes: Vec<Hyperplane>) -> Result<Self> {
        let labels = hyperplanes.iter().map(|h| h.to_string()).collect();
        Self::with_labels(dim, hyperplanes, labels)
    }

    pub fn with_labels(dim: usize, hyperplanes: Vec<Hyperplane>, labels: Vec<String>) -> Result<Self> {
        if labels.len() != hyperplanes.len() {
            return Err(Error::InvalidInput("one label per hyperplane".into()));
        }
        let mut seen = HashSet::new();
        for h in &hyperplanes {
            if h.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: h.dim(),
                });
            }
            if !seen.insert(h) {
                return Err(Error::DuplicateHyperplane(h.to_string()));
            }
        }
        Ok(Self {
            dim,
            hyperplanes,
            labels,
        })
    }

    pub fn empty(dim: usize) -> Self {
        Self {
            dim,
            hyperplanes: Vec::new(),
            labels: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn hyperplane(&self, i: usize) -> &Hyperplane {
        &self.hyperplanes[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Matrix whose rows are the normals.
    pub fn normal_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_rows(self.dim, self.hyperplanes.iter().map(|h| h.normal.clone()).collect())
    }

    /// Dimension of the span of the normals.
    pub fn rank(&self) -> usize {
        if self.is_empty() {
            return 0;
        }
        self.normal_matrix().rank()
    }

    /// True iff every coefficient of every stored hyperplane is an integer.
    pub fn is_integral(&self) -> bool {
        self.hyperplanes
            .iter()
            .all(|h| h.normal.iter().chain(Some(&h.offset)).all(|c| c.is_integer()))
    }

    /// Largest absolute value among the primitive integer forms of the
    /// hyperplanes.
    pub fn max_integer_coefficient(&self) -> BigInt {
        self.hyperplanes
            .iter()
            .flat_map(|h| h.integral_row())
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                len: self.len(),
            })
        }
    }

    /// The arrangement without hyperplane `i`; the others keep their order.
    pub fn delete(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        let mut out = self.clone();
        out.hyperplanes.remove(i);
        out.labels.remove(i);
        Ok(out)
    }

    /// The arrangement induced on hyperplane `i`, in coordinates of
    /// `R^(dim-1)`.
    pub fn contract(&self, i: usize) -> Result<Self> {
        Ok(self.contract_with_chart(i)?.0)
    }

    /// Contraction together with the chart used to coordinatise the
    /// hyperplane. `H = {v·x = a}` with leading 1 at coordinate `p` is
    /// parametrised by the remaining coordinates, `x_p = a - Σ_{j≠p} v_j x_j`.
    /// Hyperplanes parallel to `H` are dropped and coincident traces are
    /// merged, keeping the first label.
    pub fn contract_with_chart(&self, i: usize) -> Result<(Self, ContractionChart)> {
        self.check_index(i)?;
        let h = &self.hyperplanes[i];
        let p = h.pivot();
        let mut hyperplanes = Vec::new();
        let mut labels = Vec::new();
        let mut seen = HashSet::new();
        for (k, other) in self.hyperplanes.iter().enumerate() {
            if k == i {
                continue;
            }
            let scale = &other.normal[p];
            let normal: Vec<Rational> = (0..self.dim)
                .filter(|&j| j != p)
                .map(|j| &other.normal[j] - scale * &h.normal[j])
                .collect();
            let offset = &other.offset - scale * &h.offset;
            let Ok(trace) = Hyperplane::new(normal, offset) else {
                // parallel to H: empty intersection
                continue;
            };
            if seen.insert(trace.clone()) {
                hyperplanes.push(trace);
                labels.push(self.labels[k].clone());
            }
        }
        let chart = ContractionChart {
            hyperplane: h.clone(),
            pivot: p,
        };
        Ok((
            Self {
                dim: self.dim - 1,
                hyperplanes,
                labels,
            },
            chart,
        ))
    }

    /// Restriction to the span of the normals. Returns the essential
    /// arrangement in `R^rank` and the rank. The new coordinates are
    /// `y = B x`, where the rows of `B` are the reduced row echelon basis of
    /// the normal span; since `B` has identity pivot columns, each normal is
    /// rewritten as its entries at those columns.
    pub fn essentialize(&self) -> Essentialization {
        if self.is_empty() {
            return Essentialization {
                arrangement: Self::empty(0),
                rank: 0,
                basis: RationalMatrix::from_rows(self.dim, Vec::new()),
            };
        }
        let rref = self.normal_matrix().rref();
        let basis = RationalMatrix::from_rows(self.dim, rref.matrix.into_rows().into_iter().take(rref.rank).collect());
        let hyperplanes = self
            .hyperplanes
            .iter()
            .map(|h| {
                let normal = rref.pivot_cols.iter().map(|&c| h.normal[c].clone()).collect();
                Hyperplane::new(normal, h.offset.clone()).expect("normal lies in the span")
            })
            .collect();
        Essentialization {
            arrangement: Self {
                dim: rref.rank,
                hyperplanes,
                labels: self.labels.clone(),
            },
            rank: rref.rank,
            basis,
        }
    }

    /// General position: every `r <= dim` hyperplanes meet in a flat of
    /// dimension `dim - r`, and every `dim + 1` of them have empty
    /// intersection.
    pub fn is_general_position(&self) -> bool {
        let d = self.dim;
        let n = self.len();
        for r in 1..=n.min(d) {
            for subset in (0..n).combinations(r) {
                let normals: Vec<_> = subset.iter().map(|&i| self.hyperplanes[i].normal.clone()).collect();
                if rank_of(&Rationals, &normals, d) != r {
                    return false;
                }
            }
        }
        if n > d {
            for subset in (0..n).combinations(d + 1) {
                let normals: Vec<_> = subset.iter().map(|&i| self.hyperplanes[i].normal.clone()).collect();
                let augmented: Vec<_> = subset.iter().map(|&i| self.hyperplanes[i].augmented_row()).collect();
                if rank_of(&Rationals, &augmented, d + 1) == rank_of(&Rationals, &normals, d) {
                    return false;
                }
            }
        }
        true
    }
}

/// Output of [`Arrangement::essentialize`].
#[derive(Clone, Debug)]
pub struct Essentialization {
    pub arrangement: Arrangement,
    pub rank: usize,
    /// `rank × dim` change of coordinates `y = basis · x`.
    pub basis: RationalMatrix,
}

/// Coordinates on a contracted hyperplane; see
/// [`Arrangement::contract_with_chart`].
#[derive(Clone, Debug)]
pub struct ContractionChart {
    pub hyperplane: Hyperplane,
    pub pivot: usize,
}

impl ContractionChart {
    /// Rewrites an augmented row `[w | b]` over the chart coordinates as an
    /// augmented row over the ambient coordinates (zero at the pivot). Valid
    /// on the hyperplane, i.e. together with its own equation.
    pub fn lift_row(&self, row: &[Rational]) -> Vec<Rational> {
        let mut out = Vec::with_capacity(row.len() + 1);
        out.extend_from_slice(&row[..self.pivot]);
        out.push(Rational::zero());
        out.extend_from_slice(&row[self.pivot..]);
        out
    }

    /// Point of the ambient space for chart coordinates `y`.
    pub fn lift_point(&self, y: &[Rational]) -> Vec<Rational> {
        let h = &self.hyperplane;
        let mut x = Vec::with_capacity(y.len() + 1);
        x.extend_from_slice(&y[..self.pivot]);
        x.push(Rational::zero());
        x.extend_from_slice(&y[self.pivot..]);
        let rest: Rational = h.normal().iter().zip(&x).map(|(v, xi)| v * xi).sum();
        x[self.pivot] = h.offset() - rest;
        x
    }
}
