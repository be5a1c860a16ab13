use std::collections::HashMap;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use super::Graph;
use crate::arrangement::{make_family, FamilySpec};
use crate::error::{Error, Result};
use crate::exact_math::Polynomial;
use crate::poset::chi_via_mobius;
use crate::regions::{Region, Sign};

/// `χ_G(t)` as the characteristic polynomial of the graphical arrangement,
/// checked against graph deletion–contraction.
pub fn chromatic_polynomial(g: &Graph) -> Result<Polynomial> {
    let via_arrangement = chi_via_mobius(&make_family(&FamilySpec::Graphical(g.clone()))?);
    let via_graph = chromatic_by_deletion_contraction(g);
    if via_arrangement != via_graph {
        return Err(Error::CrossCheck(format!(
            "chromatic polynomial: arrangement gives {via_arrangement}, deletion-contraction gives {via_graph}"
        )));
    }
    Ok(via_arrangement)
}

/// `P(G) = P(G - e) - P(G / e)` down to edgeless graphs, `P = t^n`.
pub fn chromatic_by_deletion_contraction(g: &Graph) -> Polynomial {
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(i, j)| (i - 1, j - 1)).collect();
    let mut memo = HashMap::new();
    recurse(g.n(), edges, &mut memo)
}

/// Relabels vertices by (degree, index) and sorts the edges. Isomorphic
/// graphs may still get different keys; that only costs memo hits.
fn canonical(n: usize, edges: &[(usize, usize)]) -> (usize, Vec<(usize, usize)>) {
    let mut degree = vec![0usize; n];
    for &(a, b) in edges {
        degree[a] += 1;
        degree[b] += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (degree[v], v));
    let mut label = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        label[old] = new;
    }
    let mut out: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (label[a], label[b]);
            (x.min(y), x.max(y))
        })
        .collect();
    out.sort_unstable();
    (n, out)
}

type Memo = HashMap<(usize, Vec<(usize, usize)>), Polynomial>;

fn recurse(n: usize, edges: Vec<(usize, usize)>, memo: &mut Memo) -> Polynomial {
    if edges.is_empty() {
        return Polynomial::monomial(n);
    }
    let key = canonical(n, &edges);
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let (u, v) = *edges.last().expect("nonempty");
    let deleted = edges[..edges.len() - 1].to_vec();
    // Merge v into u, then shift labels above v down by one.
    let relabel = |x: usize| {
        let x = if x == v { u } else { x };
        if x > v {
            x - 1
        } else {
            x
        }
    };
    let mut contracted: Vec<(usize, usize)> = deleted
        .iter()
        .map(|&(a, b)| {
            let (a, b) = (relabel(a), relabel(b));
            (a.min(b), a.max(b))
        })
        .filter(|&(a, b)| a != b)
        .collect();
    contracted.sort_unstable();
    contracted.dedup();
    let p = &recurse(n, deleted, memo) - &recurse(n - 1, contracted, memo);
    memo.insert(key, p.clone());
    p
}

/// Brute-force count of proper colorings with `k` colors.
pub fn count_proper_colorings(g: &Graph, k: u64) -> u64 {
    let n = g.n() as u32;
    let total = k.pow(n);
    let mut colors = vec![0u64; g.n()];
    (0..total)
        .filter(|&code| {
            let mut c = code;
            for slot in colors.iter_mut() {
                *slot = c % k;
                c /= k;
            }
            g.edges().iter().all(|&(i, j)| colors[i - 1] != colors[j - 1])
        })
        .count() as u64
}

/// Directions of the edges of a graph, in edge order: `(from, to)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orientation {
    pub arcs: Vec<(usize, usize)>,
}

impl Orientation {
    /// The orientation whose bit `k` reverses edge `k` (`i < j` is `i → j`
    /// when the bit is clear).
    pub fn from_mask(g: &Graph, mask: u64) -> Self {
        let arcs = g
            .edges()
            .iter()
            .enumerate()
            .map(|(k, &(i, j))| if mask >> k & 1 == 1 { (j, i) } else { (i, j) })
            .collect();
        Self { arcs }
    }

    /// Kahn's algorithm: acyclic iff every vertex can be removed.
    pub fn is_acyclic(&self, n: usize) -> bool {
        let mut indegree = vec![0usize; n + 1];
        let mut out = vec![Vec::new(); n + 1];
        for &(a, b) in &self.arcs {
            indegree[b] += 1;
            out[a].push(b);
        }
        let mut stack: Vec<usize> = (1..=n).filter(|&v| indegree[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = stack.pop() {
            removed += 1;
            for &w in &out[v] {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    stack.push(w);
                }
            }
        }
        removed == n
    }
}

pub const MAX_ORIENTATION_EDGES: usize = 20;

fn check_edges(g: &Graph) -> Result<u64> {
    if g.edges().len() > MAX_ORIENTATION_EDGES {
        return Err(Error::BudgetExceeded(format!(
            "{} edges exceeds the orientation limit of {MAX_ORIENTATION_EDGES}",
            g.edges().len()
        )));
    }
    Ok(1u64 << g.edges().len())
}

pub fn count_acyclic_orientations_seq(g: &Graph) -> Result<u64> {
    let total = check_edges(g)?;
    Ok((0..total)
        .filter(|&m| Orientation::from_mask(g, m).is_acyclic(g.n()))
        .count() as u64)
}

#[cfg(feature = "parallel")]
pub fn count_acyclic_orientations_par(g: &Graph) -> Result<u64> {
    let total = check_edges(g)?;
    Ok((0..total)
        .into_par_iter()
        .filter(|&m| Orientation::from_mask(g, m).is_acyclic(g.n()))
        .count() as u64)
}

/// Brute force over all `2^|E|` orientations.
pub fn count_acyclic_orientations(g: &Graph) -> Result<u64> {
    #[cfg(feature = "parallel")]
    return count_acyclic_orientations_par(g);
    #[cfg(not(feature = "parallel"))]
    return count_acyclic_orientations_seq(g);
}

pub fn acyclic_orientations(g: &Graph) -> Result<Vec<Orientation>> {
    let total = check_edges(g)?;
    Ok((0..total)
        .map(|m| Orientation::from_mask(g, m))
        .filter(|o| o.is_acyclic(g.n()))
        .collect())
}

/// Orients edge `{i, j}` from the smaller to the larger coordinate. Edge
/// `k` of `g` is hyperplane `k` of the graphical arrangement, `x_i - x_j = 0`
/// with `i < j`, so its sign decides the direction.
pub fn region_to_orientation(g: &Graph, r: &Region) -> Orientation {
    assert_eq!(r.signs.len(), g.edges().len(), "region does not match the graph");
    let arcs = g
        .edges()
        .iter()
        .zip(&r.signs)
        .map(|(&(i, j), s)| match s {
            Sign::Minus => (i, j),
            Sign::Plus => (j, i),
        })
        .collect();
    Orientation { arcs }
}
