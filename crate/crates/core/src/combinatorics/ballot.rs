use crate::arrangement::catalan_index;
use crate::error::{Error, Result};
use crate::regions::{Region, Sign};

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan_number(n: u64) -> u64 {
    let mut c: u128 = 1;
    // binom(2n, n) built incrementally stays integral at every step.
    for k in 0..n as u128 {
        c = c * (2 * n as u128 - k) / (k + 1);
    }
    (c / (n as u128 + 1)) as u64
}

/// `C_{n+1} = Σ C_k C_{n-k}`.
pub fn catalan_by_recurrence(n: usize) -> u64 {
    let mut c = vec![1u64];
    for m in 0..n {
        c.push((0..=m).map(|k| c[k] * c[m - k]).sum());
    }
    c[n]
}

/// Nonnegative partial sums and total zero.
pub fn is_ballot(b: &[i8]) -> bool {
    let mut sum = 0i64;
    for &x in b {
        if x != 1 && x != -1 {
            return false;
        }
        sum += x as i64;
        if sum < 0 {
            return false;
        }
    }
    sum == 0
}

/// Every proper partial sum is positive.
pub fn has_positive_partial_sums(b: &[i8]) -> bool {
    let mut sum = 0i64;
    b[..b.len().saturating_sub(1)].iter().all(|&x| {
        sum += x as i64;
        sum > 0
    })
}

/// All ballot sequences of length `2n` in lexicographic order with `-1`
/// before `1`.
pub fn enumerate_ballot_sequences(n: usize) -> Vec<Vec<i8>> {
    fn extend(seq: &mut Vec<i8>, ups: usize, downs: usize, n: usize, out: &mut Vec<Vec<i8>>) {
        if seq.len() == 2 * n {
            out.push(seq.clone());
            return;
        }
        if downs < ups {
            seq.push(-1);
            extend(seq, ups, downs + 1, n, out);
            seq.pop();
        }
        if ups < n {
            seq.push(1);
            extend(seq, ups + 1, downs, n, out);
            seq.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 0, 0, n, &mut out);
    out
}

/// Whether a region of `Catalan(n)` lies in the chamber `x_1 > ... > x_n`.
pub fn in_base_chamber(n: usize, r: &Region) -> bool {
    (1..=n).all(|i| (i + 1..=n).all(|j| r.signs[catalan_index(n, i, j, 0)] == Sign::Plus))
}

/// Reads the descending order of `x_1 + 1, ..., x_n + 1, x_1, ..., x_n` off
/// the region's signs and writes `1` for each `x_i + 1` and `-1` for each
/// `x_i`. Within the chamber the only comparisons not forced are
/// `x_j + 1` against `x_i` for `i < j`, decided by `x_i - x_j = 1`.
pub fn catalan_region_to_ballot(n: usize, r: &Region) -> Result<Vec<i8>> {
    if r.signs.len() != 3 * n * n.saturating_sub(1) / 2 || !in_base_chamber(n, r) {
        return Err(Error::NotInBaseChamber);
    }
    let upper_above = |j: usize, i: usize| j <= i || r.signs[catalan_index(n, i, j, 1)] == Sign::Minus;
    let (mut u, mut l) = (1, 1);
    let mut out = Vec::with_capacity(2 * n);
    while l <= n {
        if u <= n && upper_above(u, l) {
            out.push(1);
            u += 1;
        } else {
            out.push(-1);
            l += 1;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{make_family, FamilySpec};
    use crate::regions::enumerate_regions;

    #[test]
    fn catalan_numbers() {
        assert_eq!(catalan_number(0), 1);
        assert_eq!(catalan_number(3), 5);
        assert_eq!(catalan_number(4), 14);
        assert_eq!(catalan_by_recurrence(4), 14);
        for n in 0..15 {
            assert_eq!(catalan_number(n as u64), catalan_by_recurrence(n));
            assert_eq!(
                enumerate_ballot_sequences(n.min(7)).len() as u64,
                catalan_number(n.min(7) as u64)
            );
        }
    }

    #[test]
    fn ballot_predicates() {
        assert!(is_ballot(&[1, 1, -1, 1, -1, 1, -1, -1]));
        assert!(!is_ballot(&[1, -1, -1, 1]));
        assert!(!is_ballot(&[1, 1]));
        assert!(has_positive_partial_sums(&[1, 1, -1, -1]));
        assert!(!has_positive_partial_sums(&[1, -1, 1, -1]));
    }

    fn region_from_sample(n: usize, x: &[i64]) -> Region {
        let a = make_family(&FamilySpec::Catalan(n)).unwrap();
        let sample: Vec<_> = x.iter().map(|&v| crate::exact_math::ratio(v, 10)).collect();
        let signs = a
            .hyperplanes()
            .iter()
            .map(|h| Sign::of(h, &sample).expect("generic sample"))
            .collect();
        Region {
            signs,
            sample,
            relatively_bounded: false,
        }
    }

    #[test]
    fn worked_order() {
        // x1+1 > x2+1 > x1 > x3+1 > x2 > x4+1 > x3 > x4
        let r = region_from_sample(4, &[25, 20, 12, 5]);
        assert_eq!(
            catalan_region_to_ballot(4, &r).unwrap(),
            vec![1, 1, -1, 1, -1, 1, -1, -1]
        );
    }

    #[test]
    fn two_chamber_regions() {
        let a = make_family(&FamilySpec::Catalan(2)).unwrap();
        let mut ballots: Vec<_> = enumerate_regions(&a)
            .unwrap()
            .iter()
            .filter(|r| in_base_chamber(2, r))
            .map(|r| catalan_region_to_ballot(2, r).unwrap())
            .collect();
        ballots.sort();
        assert_eq!(ballots, vec![vec![1, -1, 1, -1], vec![1, 1, -1, -1]]);
    }

    #[test]
    fn outside_chamber_is_rejected() {
        let r = region_from_sample(2, &[0, 5]);
        assert_eq!(catalan_region_to_ballot(2, &r), Err(Error::NotInBaseChamber));
    }
}
