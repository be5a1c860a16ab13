//! Regions as feasible strict sign vectors, found by exact linear
//! programming.

pub mod lp;

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use num::{One, Signed, ToPrimitive, Zero};
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arrangement::{Arrangement, Hyperplane};
use crate::error::{Error, Result};
use crate::exact_math::{Polynomial, Rational};
use crate::poset::chi_via_mobius;
use lp::{LinearProgram, LpOutcome, Relation};

/// Side of a hyperplane: `Plus` is `v·x > a`, `Minus` is `v·x < a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn apply(self, r: Rational) -> Rational {
        match self {
            Sign::Plus => r,
            Sign::Minus => -r,
        }
    }

    /// Strict side of `x` relative to `h`, or `None` on the hyperplane.
    pub fn of(h: &Hyperplane, x: &[Rational]) -> Option<Self> {
        let v = h.evaluate(x);
        if v.is_positive() {
            Some(Sign::Plus)
        } else if v.is_negative() {
            Some(Sign::Minus)
        } else {
            None
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

pub fn format_signs(signs: &[Sign]) -> String {
    signs.iter().map(Sign::to_string).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Region {
    pub signs: Vec<Sign>,
    #[serde(with = "crate::exact_math::serde_rational::vec")]
    pub sample: Vec<Rational>,
    pub relatively_bounded: bool,
}

/// Guardrails for region enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegionBudget {
    pub max_hyperplanes: usize,
    pub max_regions: usize,
}

impl Default for RegionBudget {
    fn default() -> Self {
        Self {
            max_hyperplanes: 20,
            max_regions: 1_000_000,
        }
    }
}

/// `s (v·x - a)`.
fn margin(h: &Hyperplane, s: Sign, x: &[Rational]) -> Rational {
    s.apply(h.evaluate(x))
}

/// Maximizes `t <= 1` subject to `s_i (v_i·x - a_i) >= t` for the given
/// signs and, optionally, `v_h·x = a_h`. Returns the optimizer's `x` when
/// `t* > 0`.
fn margin_lp(
    a: &Arrangement,
    signs: impl IntoIterator<Item = (usize, Sign)>,
    on: Option<usize>,
) -> Option<Vec<Rational>> {
    let d = a.dim();
    let mut objective = vec![Rational::zero(); d + 1];
    objective[d] = Rational::one();
    let mut lp = LinearProgram::new(d + 1).maximize(objective);
    for (i, s) in signs {
        let h = a.hyperplane(i);
        let mut row: Vec<Rational> = h.normal().iter().map(|v| s.apply(v.clone())).collect();
        row.push(-Rational::one());
        lp.constrain(row, Relation::Ge, s.apply(h.offset().clone()));
    }
    if let Some(k) = on {
        let h = a.hyperplane(k);
        let mut row = h.normal().to_vec();
        row.push(Rational::zero());
        lp.constrain(row, Relation::Eq, h.offset().clone());
    }
    let mut cap = vec![Rational::zero(); d + 1];
    cap[d] = Rational::one();
    lp.constrain(cap, Relation::Le, Rational::one());
    match lp.solve() {
        LpOutcome::Optimal { mut x, value } if value.is_positive() => {
            x.truncate(d);
            Some(x)
        }
        _ => None,
    }
}

/// An exact point of the open polyhedron cut out by the assigned signs, if
/// it is nonempty. Unassigned hyperplanes are unconstrained.
pub fn strict_feasible(a: &Arrangement, signs: &[Option<Sign>]) -> Option<Vec<Rational>> {
    assert!(signs.len() <= a.len(), "more signs than hyperplanes");
    margin_lp(a, signs.iter().enumerate().filter_map(|(i, s)| s.map(|s| (i, s))), None)
}

fn strict_feasible_prefix(a: &Arrangement, prefix: &[Sign]) -> Option<Vec<Rational>> {
    margin_lp(a, prefix.iter().copied().enumerate(), None)
}

/// Precomputed data for the relative-boundedness test: `w[i][k] = v_i · b_k`
/// for a basis `b_k` of the span of the normals.
struct BoundednessTest {
    w: Vec<Vec<Rational>>,
    rank: usize,
}

impl BoundednessTest {
    fn new(a: &Arrangement) -> Self {
        if a.is_empty() {
            return Self { w: Vec::new(), rank: 0 };
        }
        let rref = a.normal_matrix().rref();
        let basis: Vec<Vec<Rational>> = rref.matrix.into_rows().into_iter().take(rref.rank).collect();
        let w = a
            .hyperplanes()
            .iter()
            .map(|h| {
                basis
                    .iter()
                    .map(|b| h.normal().iter().zip(b).map(|(x, y)| x * y).sum())
                    .collect()
            })
            .collect();
        Self { w, rank: rref.rank }
    }

    /// Bounded iff no nonzero `y` in the normal span has `s_i v_i·y >= 0`
    /// for all `i`; such a `y` can be scaled to `Σ s_i v_i·y = 1`.
    fn is_bounded(&self, signs: &[Sign]) -> bool {
        let mut lp = LinearProgram::new(self.rank);
        let mut total = vec![Rational::zero(); self.rank];
        for (row, &s) in self.w.iter().zip(signs) {
            let row: Vec<Rational> = row.iter().map(|v| s.apply(v.clone())).collect();
            for (t, v) in total.iter_mut().zip(&row) {
                *t += v;
            }
            lp.constrain(row, Relation::Ge, Rational::zero());
        }
        lp.constrain(total, Relation::Eq, Rational::one());
        matches!(lp.solve(), LpOutcome::Infeasible)
    }
}

/// Whether the region with these signs is bounded after essentialization.
pub fn is_relatively_bounded(a: &Arrangement, signs: &[Sign]) -> bool {
    assert_eq!(signs.len(), a.len());
    BoundednessTest::new(a).is_bounded(signs)
}

struct Search<'a> {
    a: &'a Arrangement,
    bounded: BoundednessTest,
    found: AtomicUsize,
    max_regions: usize,
}

impl Search<'_> {
    /// Children of a prefix in sign order. A child reuses the parent's
    /// sample when that point already lies strictly on the new side.
    fn children(&self, prefix: &[Sign], sample: &[Rational]) -> Vec<(Vec<Sign>, Vec<Rational>)> {
        let h = self.a.hyperplane(prefix.len());
        [Sign::Plus, Sign::Minus]
            .into_iter()
            .filter_map(|s| {
                let mut signs = prefix.to_vec();
                signs.push(s);
                let point = if margin(h, s, sample).is_positive() {
                    Some(sample.to_vec())
                } else {
                    strict_feasible_prefix(self.a, &signs)
                };
                point.map(|p| (signs, p))
            })
            .collect()
    }

    fn dfs(&self, prefix: Vec<Sign>, sample: Vec<Rational>, out: &mut Vec<Region>) -> Result<()> {
        if prefix.len() == self.a.len() {
            if self.found.fetch_add(1, Ordering::Relaxed) >= self.max_regions {
                return Err(Error::BudgetExceeded(format!("more than {} regions", self.max_regions)));
            }
            let relatively_bounded = self.bounded.is_bounded(&prefix);
            out.push(Region {
                signs: prefix,
                sample,
                relatively_bounded,
            });
            return Ok(());
        }
        for (signs, point) in self.children(&prefix, &sample) {
            self.dfs(signs, point, out)?;
        }
        Ok(())
    }
}

fn start(a: &Arrangement, budget: RegionBudget) -> Result<Search<'_>> {
    if a.len() > budget.max_hyperplanes {
        return Err(Error::BudgetExceeded(format!(
            "{} hyperplanes exceeds the enumeration limit of {}",
            a.len(),
            budget.max_hyperplanes
        )));
    }
    Ok(Search {
        a,
        bounded: BoundednessTest::new(a),
        found: AtomicUsize::new(0),
        max_regions: budget.max_regions,
    })
}

/// Depth-first search over sign prefixes in hyperplane order, pruned by
/// strict feasibility. Regions come out sorted by sign vector.
pub fn enumerate_regions_seq(a: &Arrangement, budget: RegionBudget) -> Result<Vec<Region>> {
    let search = start(a, budget)?;
    let mut out = Vec::new();
    search.dfs(Vec::new(), vec![Rational::zero(); a.dim()], &mut out)?;
    Ok(out)
}

/// As [`enumerate_regions_seq`], expanding a frontier of prefixes
/// breadth-first and searching the subtrees in parallel. Frontier order is
/// sign order, so concatenating the subtree results keeps regions sorted.
#[cfg(feature = "parallel")]
pub fn enumerate_regions_par(a: &Arrangement, budget: RegionBudget) -> Result<Vec<Region>> {
    let search = start(a, budget)?;
    let target = 4 * rayon::current_num_threads();
    let mut frontier = vec![(Vec::new(), vec![Rational::zero(); a.dim()])];
    let mut depth = 0;
    while depth < a.len() && frontier.len() < target {
        frontier = frontier
            .par_iter()
            .map(|(prefix, sample)| search.children(prefix, sample))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect();
        depth += 1;
    }
    let parts = frontier
        .into_par_iter()
        .map(|(prefix, sample)| {
            let mut out = Vec::new();
            search.dfs(prefix, sample, &mut out).map(|_| out)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(parts.into_iter().flatten().collect())
}

pub fn enumerate_regions_with(a: &Arrangement, budget: RegionBudget) -> Result<Vec<Region>> {
    #[cfg(feature = "parallel")]
    return enumerate_regions_par(a, budget);
    #[cfg(not(feature = "parallel"))]
    return enumerate_regions_seq(a, budget);
}

pub fn enumerate_regions(a: &Arrangement) -> Result<Vec<Region>> {
    enumerate_regions_with(a, RegionBudget::default())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionCounts {
    pub regions: u64,
    pub bounded: u64,
}

fn signed_value(chi: &Polynomial, t: i64, exponent: usize) -> u64 {
    let v = chi.eval_i64(t);
    let v = if exponent % 2 == 1 { -v } else { v };
    assert!(
        v.is_integer() && !v.is_negative(),
        "count {v} from χ is not a natural number"
    );
    v.to_integer().to_u64().expect("count fits in u64")
}

/// Region counts from `χ`: `(-1)^d χ(-1)` regions and `(-1)^rank χ(1)`
/// relatively bounded ones.
pub fn counts_from_chi(chi: &Polynomial, dim: usize, rank: usize) -> RegionCounts {
    RegionCounts {
        regions: signed_value(chi, -1, dim),
        bounded: signed_value(chi, 1, rank),
    }
}

pub fn zaslavsky_counts(a: &Arrangement) -> RegionCounts {
    counts_from_chi(&chi_via_mobius(a), a.dim(), a.rank())
}

pub fn counts_of(regions: &[Region]) -> RegionCounts {
    RegionCounts {
        regions: regions.len() as u64,
        bounded: regions.iter().filter(|r| r.relatively_bounded).count() as u64,
    }
}

/// Facet adjacency between regions and Hamming distance from a base region.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionGraph {
    pub base: usize,
    pub adjacency: Vec<Vec<usize>>,
    pub distance: Vec<usize>,
}

impl RegionGraph {
    /// `histogram[k]` = number of regions at distance `k` from the base.
    pub fn distance_histogram(&self) -> Vec<u64> {
        let max = self.distance.iter().copied().max().unwrap_or(0);
        let mut h = vec![0; max + 1];
        for &k in &self.distance {
            h[k] += 1;
        }
        h
    }
}

/// Whether the regions `signs` and `signs` with `h` flipped share a facet on
/// `h`: some point of `h` satisfies every other sign strictly.
pub fn shares_facet(a: &Arrangement, signs: &[Sign], h: usize) -> bool {
    let others = signs.iter().copied().enumerate().filter(|&(i, _)| i != h);
    margin_lp(a, others, Some(h)).is_some()
}

pub fn adjacency_and_distance(a: &Arrangement, regions: &[Region], base: &[Sign]) -> Result<RegionGraph> {
    if base.len() != a.len() {
        return Err(Error::BaseNotFound);
    }
    let index: HashMap<&[Sign], usize> = regions
        .iter()
        .enumerate()
        .map(|(k, r)| (r.signs.as_slice(), k))
        .collect();
    let base_idx = *index.get(base).ok_or(Error::BaseNotFound)?;
    if strict_feasible_prefix(a, base).is_none() {
        return Err(Error::BaseNotFound);
    }
    let neighbours = |r: &Region| -> Vec<usize> {
        let mut out: Vec<usize> = (0..a.len())
            .filter_map(|h| {
                let mut flipped = r.signs.clone();
                flipped[h] = flipped[h].flip();
                let &k = index.get(flipped.as_slice())?;
                shares_facet(a, &r.signs, h).then_some(k)
            })
            .collect();
        out.sort_unstable();
        out
    };
    #[cfg(feature = "parallel")]
    let adjacency = regions.par_iter().map(neighbours).collect();
    #[cfg(not(feature = "parallel"))]
    let adjacency = regions.iter().map(neighbours).collect();
    let distance = regions
        .iter()
        .map(|r| r.signs.iter().zip(base).filter(|(x, y)| x != y).count())
        .collect();
    Ok(RegionGraph {
        base: base_idx,
        adjacency,
        distance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{make_family, FamilySpec};
    use crate::exact_math::{int, ratio};

    fn line(offsets: &[i64]) -> Arrangement {
        Arrangement::new(
            1,
            offsets
                .iter()
                .map(|&o| Hyperplane::from_i64(&[1], o).unwrap())
                .collect(),
        )
        .unwrap()
    }

    fn three_lines() -> Arrangement {
        Arrangement::new(
            2,
            vec![
                Hyperplane::from_i64(&[1, 0], 0).unwrap(),
                Hyperplane::from_i64(&[0, 1], 0).unwrap(),
                Hyperplane::from_i64(&[1, 1], 1).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn strict_feasibility_examples() {
        let x = strict_feasible(&line(&[0]), &[Some(Sign::Plus)]).unwrap();
        assert!(x[0].is_positive());
        let x = strict_feasible(&line(&[0, 1]), &[Some(Sign::Plus), Some(Sign::Minus)]).unwrap();
        assert!(x[0] > int(0) && x[0] < int(1));
        assert_eq!(x[0], ratio(1, 2));
        assert!(strict_feasible(&line(&[0, 1]), &[Some(Sign::Minus), Some(Sign::Plus)]).is_none());
        assert!(strict_feasible(&line(&[0, 1]), &[None, Some(Sign::Plus)]).is_some());
    }

    #[test]
    fn enumeration_examples() {
        let regions = enumerate_regions(&three_lines()).unwrap();
        assert_eq!(regions.len(), 7);
        let bounded: Vec<_> = regions.iter().filter(|r| r.relatively_bounded).collect();
        assert_eq!(bounded.len(), 1);
        assert_eq!(bounded[0].signs, vec![Sign::Plus, Sign::Plus, Sign::Minus]);

        let braid = enumerate_regions(&make_family(&FamilySpec::Braid(3)).unwrap()).unwrap();
        assert_eq!(braid.len(), 6);
        assert!(braid.iter().all(|r| !r.relatively_bounded));

        let empty = enumerate_regions(&Arrangement::empty(2)).unwrap();
        assert_eq!(empty.len(), 1);
        assert!(empty[0].signs.is_empty());
    }

    #[test]
    fn samples_satisfy_their_signs() {
        let a = make_family(&FamilySpec::Catalan(3)).unwrap();
        for r in enumerate_regions(&a).unwrap() {
            for (h, &s) in a.hyperplanes().iter().zip(&r.signs) {
                assert_eq!(Sign::of(h, &r.sample), Some(s));
            }
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let a = make_family(&FamilySpec::Shi(3)).unwrap();
        let seq = enumerate_regions_seq(&a, RegionBudget::default()).unwrap();
        let mut sorted = seq.clone();
        sorted.sort_by(|x, y| x.signs.cmp(&y.signs));
        assert_eq!(seq, sorted);
        #[cfg(feature = "parallel")]
        assert_eq!(enumerate_regions_par(&a, RegionBudget::default()).unwrap(), seq);
    }

    #[test]
    fn budgets() {
        let a = make_family(&FamilySpec::Catalan(4)).unwrap();
        let tight = RegionBudget {
            max_hyperplanes: 10,
            ..RegionBudget::default()
        };
        assert!(matches!(
            enumerate_regions_with(&a, tight),
            Err(Error::BudgetExceeded(_))
        ));
        let few = RegionBudget {
            max_regions: 5,
            ..RegionBudget::default()
        };
        assert!(matches!(
            enumerate_regions_seq(&three_lines(), few),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn boundedness_examples() {
        use Sign::*;
        assert!(is_relatively_bounded(&three_lines(), &[Plus, Plus, Minus]));
        assert!(!is_relatively_bounded(&three_lines(), &[Plus, Plus, Plus]));
        assert!(!is_relatively_bounded(&line(&[0]), &[Plus]));
        assert!(is_relatively_bounded(&line(&[0, 1]), &[Plus, Minus]));
        // Braid(3) regions are cones: unbounded even after essentialization.
        let braid = make_family(&FamilySpec::Braid(3)).unwrap();
        assert!(!is_relatively_bounded(&braid, &[Plus, Plus, Plus]));
    }

    #[test]
    fn zaslavsky_examples() {
        let c = |spec| zaslavsky_counts(&make_family(&spec).unwrap());
        assert_eq!(
            c(FamilySpec::Catalan(3)),
            RegionCounts {
                regions: 30,
                bounded: 12
            }
        );
        assert_eq!(
            c(FamilySpec::Shi(3)),
            RegionCounts {
                regions: 16,
                bounded: 4
            }
        );
        assert_eq!(c(FamilySpec::Linial(3)).regions, 7);
        assert_eq!(
            zaslavsky_counts(&three_lines()),
            RegionCounts { regions: 7, bounded: 1 }
        );
    }

    #[test]
    fn shi_two_is_a_path() {
        let a = make_family(&FamilySpec::Shi(2)).unwrap();
        let regions = enumerate_regions(&a).unwrap();
        assert_eq!(regions.len(), 3);
        // x1 - x2 < 0 is one end of the path.
        let end = vec![Sign::Minus, Sign::Minus];
        let g = adjacency_and_distance(&a, &regions, &end).unwrap();
        let mut d = g.distance.clone();
        d.sort_unstable();
        assert_eq!(d, vec![0, 1, 2]);
        assert_eq!(g.distance[g.base], 0);
        let degrees: Vec<usize> = g.adjacency.iter().map(Vec::len).collect();
        assert_eq!(degrees.iter().sum::<usize>(), 4);
        assert_eq!(g.distance_histogram(), vec![1, 1, 1]);
    }

    #[test]
    fn base_must_be_a_region() {
        let a = line(&[0, 1]);
        let regions = enumerate_regions(&a).unwrap();
        assert_eq!(
            adjacency_and_distance(&a, &regions, &[Sign::Minus, Sign::Plus]),
            Err(Error::BaseNotFound)
        );
    }

    #[test]
    fn serde_round_trip() {
        let regions = enumerate_regions(&line(&[0, 1])).unwrap();
        let json = serde_json::to_string(&regions).unwrap();
        assert!(json.contains("\"1/2\""));
        let back: Vec<Region> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, regions);
    }
}
