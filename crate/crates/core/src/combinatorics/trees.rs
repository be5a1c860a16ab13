use std::collections::BTreeSet;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Decodes a Prüfer sequence of length `m - 2` over `0..m` into the edge
/// list of a labeled tree on `0..m`.
pub fn prufer_to_edges(seq: &[usize], m: usize) -> Vec<(usize, usize)> {
    assert_eq!(seq.len() + 2, m.max(2), "Prüfer sequence of wrong length");
    if m < 2 {
        return Vec::new();
    }
    let mut degree = vec![1usize; m];
    for &v in seq {
        degree[v] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..m).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(m - 1);
    for &v in seq {
        let leaf = leaves.pop_first().expect("a tree has a leaf");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Calls `f` with the edges of every labeled tree on `0..m`.
fn for_each_tree_with_first(m: usize, first: usize, mut f: impl FnMut(&[(usize, usize)])) {
    let len = m.saturating_sub(2);
    if len == 0 {
        if first == 0 {
            f(&prufer_to_edges(&[], m));
        }
        return;
    }
    let mut seq = vec![0; len];
    seq[0] = first;
    loop {
        f(&prufer_to_edges(&seq, m));
        let mut k = len - 1;
        loop {
            if k == 0 {
                return;
            }
            seq[k] += 1;
            if seq[k] < m {
                break;
            }
            seq[k] = 0;
            k -= 1;
        }
    }
}

/// Number of values the first Prüfer entry ranges over.
fn first_choices(m: usize) -> usize {
    if m <= 2 {
        1
    } else {
        m
    }
}

fn adjacency(m: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); m];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

/// Every vertex is above all its neighbours or below all of them.
pub fn is_alternating(m: usize, edges: &[(usize, usize)]) -> bool {
    adjacency(m, edges)
        .iter()
        .enumerate()
        .all(|(v, ns)| ns.iter().all(|&w| w > v) || ns.iter().all(|&w| w < v))
}

/// Pairs `i < j` (both nonzero) with `j` on the path from `i` to the root 0.
pub fn inversions(m: usize, edges: &[(usize, usize)]) -> usize {
    let adj = adjacency(m, edges);
    let mut parent = vec![usize::MAX; m];
    let mut stack = vec![0];
    parent[0] = 0;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if parent[w] == usize::MAX {
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    (1..m)
        .map(|i| {
            let mut count = 0;
            let mut v = parent[i];
            while v != 0 {
                if v > i {
                    count += 1;
                }
                v = parent[v];
            }
            count
        })
        .sum()
}

pub const MAX_ALTERNATING_N: usize = 6;
pub const MAX_INVERSION_N: usize = 5;

/// Alternating trees on `n + 1` labeled vertices, by brute force over all
/// Prüfer sequences.
pub fn count_alternating_trees(n: usize) -> Result<u64> {
    if n == 0 || n > MAX_ALTERNATING_N {
        return Err(Error::BudgetExceeded(format!(
            "alternating trees are counted for 1 <= n <= {MAX_ALTERNATING_N}"
        )));
    }
    let m = n + 1;
    let per_first = |first: usize| {
        let mut count = 0u64;
        for_each_tree_with_first(m, first, |e| count += is_alternating(m, e) as u64);
        count
    };
    #[cfg(feature = "parallel")]
    return Ok((0..first_choices(m)).into_par_iter().map(per_first).sum());
    #[cfg(not(feature = "parallel"))]
    return Ok((0..first_choices(m)).map(per_first).sum());
}

/// `h[k]` = number of labeled trees on `0..=n` with `k` inversions, for
/// `k = 0..=binom(n, 2)`.
pub fn tree_inversion_histogram(n: usize) -> Result<Vec<u64>> {
    if n > MAX_INVERSION_N {
        return Err(Error::BudgetExceeded(format!(
            "tree inversions are tabulated for n <= {MAX_INVERSION_N}"
        )));
    }
    let m = n + 1;
    let size = n * n.saturating_sub(1) / 2 + 1;
    let mut h = vec![0u64; size];
    if m == 1 {
        h[0] = 1;
        return Ok(h);
    }
    for first in 0..first_choices(m) {
        for_each_tree_with_first(m, first, |e| h[inversions(m, e)] += 1);
    }
    Ok(h)
}
