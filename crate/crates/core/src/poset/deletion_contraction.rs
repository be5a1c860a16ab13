use std::collections::HashMap;

use crate::arrangement::Arrangement;
use crate::exact_math::{Polynomial, Rational};

type Key = (usize, Vec<Vec<Rational>>);

/// `χ_A = χ_{A-H} - χ_{A/H}` with `H` the last hyperplane, down to
/// `χ_∅ = t^d`. Subproblems are memoized on the hyperplane set, since
/// different branches revisit the same arrangements.
pub fn chi_via_deletion_contraction(a: &Arrangement) -> Polynomial {
    let mut memo = HashMap::new();
    recurse(a, &mut memo)
}

fn recurse(a: &Arrangement, memo: &mut HashMap<Key, Polynomial>) -> Polynomial {
    if a.is_empty() {
        return Polynomial::monomial(a.dim());
    }
    let mut rows: Vec<_> = a.hyperplanes().iter().map(|h| h.augmented_row()).collect();
    rows.sort();
    let key = (a.dim(), rows);
    if let Some(chi) = memo.get(&key) {
        return chi.clone();
    }
    let last = a.len() - 1;
    let deleted = a.delete(last).expect("index in range");
    let contracted = a.contract(last).expect("index in range");
    let chi = &recurse(&deleted, memo) - &recurse(&contracted, memo);
    memo.insert(key, chi.clone());
    chi
}
