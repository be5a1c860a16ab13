use serde::{Deserialize, Serialize};

use super::{Arrangement, Hyperplane};
use crate::combinatorics::Graph;
use crate::error::{Error, Result};
use crate::exact_math::{int, Rational};

/// The classical families. Vertex and coordinate indices are 1-based in
/// labels and 0-based in storage.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilySpec {
    /// `n` hyperplanes in general position in `R^d`, on the moment curve.
    Generic { n: usize, d: usize },
    /// `x_i - x_j = 0`.
    Braid(usize),
    /// `x_i - x_j = 0` for each edge `{i, j}`.
    Graphical(Graph),
    /// `x_i - x_j ∈ {-1, 0, 1}`.
    Catalan(usize),
    /// `x_i - x_j ∈ {0, 1}`.
    Shi(usize),
    /// `x_i - x_j = 1`.
    Linial(usize),
}

impl FamilySpec {
    pub fn name(&self) -> String {
        match self {
            FamilySpec::Generic { n, d } => format!("generic({n},{d})"),
            FamilySpec::Braid(n) => format!("braid({n})"),
            FamilySpec::Graphical(g) => format!("graphical({} vertices, {} edges)", g.n(), g.edges().len()),
            FamilySpec::Catalan(n) => format!("catalan({n})"),
            FamilySpec::Shi(n) => format!("shi({n})"),
            FamilySpec::Linial(n) => format!("linial({n})"),
        }
    }
}

/// Builds the arrangement of a family. Difference families list the
/// hyperplanes pair by pair (`i < j` lexicographic) and, within a pair, by
/// increasing offset.
pub fn make_family(spec: &FamilySpec) -> Result<Arrangement> {
    match spec {
        FamilySpec::Generic { n, d } => {
            if *d < 1 {
                return Err(Error::InvalidSpec("generic family needs d >= 1".into()));
            }
            let hyperplanes = (1..=*n as i64)
                .map(|t| {
                    let t = int(t);
                    let mut power = int(1);
                    let mut normal = Vec::with_capacity(*d);
                    for _ in 0..*d {
                        normal.push(power.clone());
                        power *= &t;
                    }
                    Hyperplane::new(normal, power)
                })
                .collect::<Result<Vec<_>>>()?;
            Arrangement::new(*d, hyperplanes)
        }
        FamilySpec::Braid(n) => differences(*n, &[0]),
        FamilySpec::Catalan(n) => differences(*n, &[-1, 0, 1]),
        FamilySpec::Shi(n) => differences(*n, &[0, 1]),
        FamilySpec::Linial(n) => differences(*n, &[1]),
        FamilySpec::Graphical(g) => {
            let n = g.n();
            if n < 1 {
                return Err(Error::InvalidSpec("graph needs at least one vertex".into()));
            }
            let hyperplanes = g
                .edges()
                .iter()
                .map(|&(i, j)| difference(n, i, j, 0))
                .collect::<Result<Vec<_>>>()?;
            Arrangement::new(n, hyperplanes)
        }
    }
}

fn difference(n: usize, i: usize, j: usize, offset: i64) -> Result<Hyperplane> {
    if i == 0 || j == 0 || i > n || j > n || i == j {
        return Err(Error::InvalidSpec(format!("bad vertex pair ({i}, {j}) for n = {n}")));
    }
    let mut normal = vec![Rational::from_integer(0.into()); n];
    normal[i - 1] = int(1);
    normal[j - 1] = int(-1);
    Hyperplane::new(normal, int(offset))
}

fn differences(n: usize, offsets: &[i64]) -> Result<Arrangement> {
    if n < 1 {
        return Err(Error::InvalidSpec("family needs n >= 1".into()));
    }
    let mut hyperplanes = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for &a in offsets {
                hyperplanes.push(difference(n, i, j, a)?);
            }
        }
    }
    Arrangement::new(n, hyperplanes)
}

/// Position of the pair `(i, j)`, `1 <= i < j <= n`, in lexicographic order.
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    assert!(1 <= i && i < j && j <= n, "pair ({i}, {j}) out of range");
    (1..i).map(|a| n - a).sum::<usize>() + (j - i - 1)
}

/// Index of `x_i - x_j = offset` (`offset ∈ {-1, 0, 1}`) in `Catalan(n)`.
pub fn catalan_index(n: usize, i: usize, j: usize, offset: i64) -> usize {
    assert!((-1..=1).contains(&offset));
    3 * pair_index(n, i, j) + (offset + 1) as usize
}

/// Index of `x_i - x_j = offset` (`offset ∈ {0, 1}`) in `Shi(n)`.
pub fn shi_index(n: usize, i: usize, j: usize, offset: i64) -> usize {
    assert!((0..=1).contains(&offset));
    2 * pair_index(n, i, j) + offset as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braid_three() {
        let a = make_family(&FamilySpec::Braid(3)).unwrap();
        assert_eq!(a.labels(), &["x1-x2=0", "x1-x3=0", "x2-x3=0"]);
    }

    #[test]
    fn shi_two() {
        let a = make_family(&FamilySpec::Shi(2)).unwrap();
        assert_eq!(a.labels(), &["x1-x2=0", "x1-x2=1"]);
    }

    #[test]
    fn sizes() {
        assert_eq!(make_family(&FamilySpec::Catalan(4)).unwrap().len(), 18);
        assert_eq!(make_family(&FamilySpec::Linial(5)).unwrap().len(), 10);
        assert_eq!(make_family(&FamilySpec::Braid(1)).unwrap().len(), 0);
        let g = make_family(&FamilySpec::Generic { n: 4, d: 2 }).unwrap();
        assert_eq!(g.labels(), &["x1+x2=1", "x1+2x2=4", "x1+3x2=9", "x1+4x2=16"]);
        assert!(g.is_general_position());
    }

    #[test]
    fn invalid_specs() {
        assert!(matches!(make_family(&FamilySpec::Shi(0)), Err(Error::InvalidSpec(_))));
        assert!(matches!(
            make_family(&FamilySpec::Generic { n: 3, d: 0 }),
            Err(Error::InvalidSpec(_))
        ));
        assert!(make_family(&FamilySpec::Generic { n: 0, d: 2 }).unwrap().is_empty());
    }

    #[test]
    fn index_helpers_agree_with_labels() {
        let cat = make_family(&FamilySpec::Catalan(4)).unwrap();
        assert_eq!(cat.labels()[catalan_index(4, 2, 4, 1)], "x2-x4=1");
        assert_eq!(cat.labels()[catalan_index(4, 1, 3, -1)], "x1-x3=-1");
        let shi = make_family(&FamilySpec::Shi(4)).unwrap();
        assert_eq!(shi.labels()[shi_index(4, 3, 4, 0)], "x3-x4=0");
        assert_eq!(shi.labels()[shi_index(4, 1, 2, 1)], "x1-x2=1");
    }
}
