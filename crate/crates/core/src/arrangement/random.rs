use rand::Rng;

use super::{Arrangement, Hyperplane};
use crate::combinatorics::Graph;
use crate::exact_math::{ratio, Rational};

fn coeff(rng: &mut impl Rng, max_num: i64, max_den: i64) -> Rational {
    ratio(rng.random_range(-max_num..=max_num), rng.random_range(1..=max_den))
}

/// A random arrangement of `n` distinct hyperplanes in `R^d` whose
/// coefficients are `p / q` with `|p| <= max_num` and `1 <= q <= max_den`.
pub fn random_arrangement(rng: &mut impl Rng, d: usize, n: usize, max_num: i64, max_den: i64) -> Arrangement {
    assert!(d >= 1 && max_num >= 1 && max_den >= 1);
    let mut hyperplanes: Vec<Hyperplane> = Vec::with_capacity(n);
    while hyperplanes.len() < n {
        let normal: Vec<Rational> = (0..d).map(|_| coeff(rng, max_num, max_den)).collect();
        let offset = coeff(rng, max_num, max_den);
        if let Ok(h) = Hyperplane::new(normal, offset) {
            if !hyperplanes.contains(&h) {
                hyperplanes.push(h);
            }
        }
    }
    Arrangement::new(d, hyperplanes).expect("hyperplanes are distinct")
}

/// A uniformly random simple graph on `n` vertices.
pub fn random_graph(rng: &mut impl Rng, n: usize) -> Graph {
    let pairs = n * n.saturating_sub(1) / 2;
    let mask = if pairs == 0 {
        0
    } else {
        rng.random_range(0..1u64 << pairs)
    };
    Graph::from_mask(n, mask)
}
