use super::field::{Field, Rational, Rationals};

/// Dense rectangular matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<Vec<E>>,
}

pub type RationalMatrix = Matrix<Rational>;

/// Result of a reduction to reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref<E> {
    pub matrix: Matrix<E>,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl<E: Clone> Matrix<E> {
    /// Builds a matrix from rows. All rows must have length `cols`.
    pub fn from_rows(cols: usize, data: Vec<Vec<E>>) -> Self {
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        Self {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i][j]
    }

    pub fn into_rows(self) -> Vec<Vec<E>> {
        self.data
    }

    pub fn transpose(&self) -> Self {
        let data = (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.data[i][j].clone()).collect())
            .collect();
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }
}

impl RationalMatrix {
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| super::field::int(v)).collect())
                .collect(),
        )
    }

    pub fn rref(&self) -> Rref<Rational> {
        rref_over(&Rationals, self)
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }
}

/// Reduced row echelon form over any field. Zero rows end up at the bottom.
pub fn rref_over<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Rref<F::Elem> {
    let mut data = m.data.clone();
    let pivot_cols = rref_in_place(field, &mut data, m.cols);
    Rref {
        rank: pivot_cols.len(),
        matrix: Matrix {
            rows: m.rows,
            cols: m.cols,
            data,
        },
        pivot_cols,
    }
}

/// Row-reduces `rows` in place (Gauss-Jordan) and returns the pivot columns.
/// Every row is assumed to have length `cols`.
pub fn rref_in_place<F: Field>(field: &F, rows: &mut [Vec<F::Elem>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, found);
        let inv = field.inv(&rows[r][c]);
        for v in rows[r].iter_mut() {
            *v = field.mul(v, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !field.is_zero(p) {
                    *v = field.sub(v, &field.mul(&factor, p));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Reduces `v` against a matrix already in RREF (given by its nonzero rows
/// and pivot columns). Returns the remainder, which is zero iff `v` lies in
/// the row space.
pub fn reduce_against<F: Field>(
    field: &F,
    basis: &[Vec<F::Elem>],
    pivot_cols: &[usize],
    v: &[F::Elem],
) -> Vec<F::Elem> {
    let mut out = v.to_vec();
    for (row, &c) in basis.iter().zip(pivot_cols) {
        if field.is_zero(&out[c]) {
            continue;
        }
        let factor = out[c].clone();
        for (o, b) in out.iter_mut().zip(row) {
            if !field.is_zero(b) {
                *o = field.sub(o, &field.mul(&factor, b));
            }
        }
    }
    out
}

/// Rank of a list of rows, each of length `cols`.
pub fn rank_of<F: Field>(field: &F, rows: &[Vec<F::Elem>], cols: usize) -> usize {
    let mut work = rows.to_vec();
    rref_in_place(field, &mut work, cols).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::field::{int, ratio};
    use proptest::prelude::*;

    #[test]
    fn identity_is_fixed() {
        let m = RationalMatrix::from_i64(&[&[1, 0], &[0, 1]]);
        let r = m.rref();
        assert_eq!(r.matrix, m);
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivot_cols, vec![0, 1]);
    }

    #[test]
    fn proportional_rows_collapse() {
        let m = RationalMatrix::from_i64(&[&[1, 1], &[2, 2]]);
        let r = m.rref();
        assert_eq!(r.matrix, RationalMatrix::from_i64(&[&[1, 1], &[0, 0]]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn augmented_three_lines() {
        // x = 0, y = 0, x + y = 1 as augmented rows [v | a].
        let m = RationalMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 1]]);
        let r = m.rref();
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivot_cols, vec![0, 1, 2]);
    }

    #[test]
    fn reduce_against_detects_membership() {
        let m = RationalMatrix::from_i64(&[&[1, 2, 3], &[0, 1, 1]]);
        let r = m.rref();
        let basis: Vec<_> = r.matrix.into_rows().into_iter().take(r.rank).collect();
        let inside = vec![int(2), int(5), int(7)];
        let outside = vec![int(0), int(0), ratio(1, 2)];
        let f = Rationals;
        assert!(reduce_against(&f, &basis, &r.pivot_cols, &inside)
            .iter()
            .all(|v| f.is_zero(v)));
        assert!(!reduce_against(&f, &basis, &r.pivot_cols, &outside)
            .iter()
            .all(|v| f.is_zero(v)));
    }

    fn small_matrix() -> impl Strategy<Value = RationalMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec((-4i64..5, 1i64..4), c), r).prop_map(move |rows| {
                RationalMatrix::from_rows(
                    c,
                    rows.into_iter()
                        .map(|row| row.into_iter().map(|(n, d)| ratio(n, d)).collect())
                        .collect(),
                )
            })
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in small_matrix()) {
            let once = m.rref();
            let twice = once.matrix.rref();
            prop_assert_eq!(&once.matrix, &twice.matrix);
            prop_assert_eq!(once.rank, twice.rank);
        }

        #[test]
        fn row_rank_equals_column_rank(m in small_matrix()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn pivots_strictly_increase(m in small_matrix()) {
            let r = m.rref();
            prop_assert!(r.pivot_cols.windows(2).all(|w| w[0] < w[1]));
            for (i, &c) in r.pivot_cols.iter().enumerate() {
                prop_assert_eq!(r.matrix.get(i, c), &int(1));
            }
        }
    }
}
