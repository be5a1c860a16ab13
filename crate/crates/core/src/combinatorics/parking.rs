use std::collections::VecDeque;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::arrangement::{make_family, shi_index, FamilySpec};
use crate::error::{Error, Result};
use crate::regions::{adjacency_and_distance, enumerate_regions, Region, RegionGraph, Sign};

/// Cars arrive in order; car `i` drives to spot `a_i` and takes the first
/// free spot from there on. True iff every car parks.
pub fn is_parking_function(a: &[usize]) -> bool {
    let n = a.len();
    let mut taken = vec![false; n + 1];
    for &pref in a {
        if pref == 0 {
            return false;
        }
        let Some(spot) = (pref..=n).find(|&s| !taken[s]) else {
            return false;
        };
        taken[spot] = true;
    }
    true
}

/// At least `k` entries are `<= k` for every `k`.
pub fn is_parking_function_sorted(a: &[usize]) -> bool {
    let mut b = a.to_vec();
    b.sort_unstable();
    b.iter().enumerate().all(|(k, &v)| v >= 1 && v <= k + 1)
}

pub const MAX_PARKING_LENGTH: usize = 7;

fn check_length(n: usize) -> Result<()> {
    if n > MAX_PARKING_LENGTH {
        return Err(Error::BudgetExceeded(format!(
            "parking functions of length {n} exceed the limit of {MAX_PARKING_LENGTH}"
        )));
    }
    Ok(())
}

/// The sequences of `[1..n]^n` starting with `first`, in lexicographic
/// order, that pass the parking simulation.
fn with_first(n: usize, first: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut seq = vec![1; n];
    seq[0] = first;
    loop {
        if is_parking_function(&seq) {
            out.push(seq.clone());
        }
        let mut k = n - 1;
        loop {
            if k == 0 {
                return out;
            }
            if seq[k] < n {
                seq[k] += 1;
                break;
            }
            seq[k] = 1;
            k -= 1;
        }
    }
}

pub fn enumerate_parking_functions_seq(n: usize) -> Result<Vec<Vec<usize>>> {
    check_length(n)?;
    if n == 0 {
        return Ok(vec![Vec::new()]);
    }
    Ok((1..=n).flat_map(|f| with_first(n, f)).collect())
}

#[cfg(feature = "parallel")]
pub fn enumerate_parking_functions_par(n: usize) -> Result<Vec<Vec<usize>>> {
    check_length(n)?;
    if n == 0 {
        return Ok(vec![Vec::new()]);
    }
    let parts: Vec<Vec<Vec<usize>>> = (1..=n).into_par_iter().map(|f| with_first(n, f)).collect();
    Ok(parts.into_iter().flatten().collect())
}

/// All parking functions of length `n` in lexicographic order, by filtering
/// `[1..n]^n` through the simulation.
pub fn enumerate_parking_functions(n: usize) -> Result<Vec<Vec<usize>>> {
    #[cfg(feature = "parallel")]
    return enumerate_parking_functions_par(n);
    #[cfg(not(feature = "parallel"))]
    return enumerate_parking_functions_seq(n);
}

/// Signs of the base region `{0 < x_i - x_j < 1 : i < j}` of `Shi(n)`.
pub fn shi_base_signs(n: usize) -> Vec<Sign> {
    (0..n * n.saturating_sub(1) / 2)
        .flat_map(|_| [Sign::Plus, Sign::Minus])
        .collect()
}

/// Regions of `Shi(n)` with their parking-function labels.
#[derive(Clone, Debug)]
pub struct PakLabeling {
    pub regions: Vec<Region>,
    pub graph: RegionGraph,
    pub labels: Vec<Vec<usize>>,
}

pub const MAX_PAK_N: usize = 4;

/// Propagates labels outward from the base region: crossing `x_i - x_j = 0`
/// away from the base adds `e_i`, crossing `x_i - x_j = 1` adds `e_j`.
/// Every such crossing is checked, so a region reached along two paths
/// must receive the same label from both.
pub fn pak_labeling(n: usize) -> Result<PakLabeling> {
    if n == 0 || n > MAX_PAK_N {
        return Err(Error::BudgetExceeded(format!(
            "Pak labeling is limited to 1 <= n <= {MAX_PAK_N}"
        )));
    }
    let a = make_family(&FamilySpec::Shi(n))?;
    let regions = enumerate_regions(&a)?;
    let graph = adjacency_and_distance(&a, &regions, &shi_base_signs(n))?;

    // Hyperplane index -> coordinate to bump (0-based).
    let mut bump = vec![0usize; a.len()];
    for i in 1..=n {
        for j in i + 1..=n {
            bump[shi_index(n, i, j, 0)] = i - 1;
            bump[shi_index(n, i, j, 1)] = j - 1;
        }
    }

    let mut labels: Vec<Option<Vec<usize>>> = vec![None; regions.len()];
    labels[graph.base] = Some(vec![1; n]);
    let mut queue = VecDeque::from([graph.base]);
    while let Some(r) = queue.pop_front() {
        let label = labels[r].clone().expect("queued regions are labeled");
        for &s in &graph.adjacency[r] {
            if graph.distance[s] != graph.distance[r] + 1 {
                continue;
            }
            let h = (0..a.len())
                .find(|&h| regions[r].signs[h] != regions[s].signs[h])
                .expect("adjacent regions differ");
            let mut next = label.clone();
            next[bump[h]] += 1;
            match &labels[s] {
                None => {
                    labels[s] = Some(next);
                    queue.push_back(s);
                }
                Some(existing) if *existing != next => {
                    return Err(Error::InconsistentLabel(crate::regions::format_signs(
                        &regions[s].signs,
                    )));
                }
                Some(_) => {}
            }
        }
    }
    let labels = labels
        .into_iter()
        .zip(&regions)
        .map(|(l, r)| l.ok_or_else(|| Error::InconsistentLabel(crate::regions::format_signs(&r.signs))))
        .collect::<Result<Vec<_>>>()?;
    Ok(PakLabeling { regions, graph, labels })
}
