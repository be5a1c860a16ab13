use std::collections::BTreeSet;

use hyperarr::arrangement::{make_family, random_arrangement, Arrangement, FamilySpec, Hyperplane};
use hyperarr::regions::{
    adjacency_and_distance, counts_of, enumerate_regions_par, enumerate_regions_seq, enumerate_regions_with,
    is_relatively_bounded, zaslavsky_counts, RegionBudget, Sign,
};
use hyperarr::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn suite() -> Vec<Arrangement> {
    let mut out: Vec<Arrangement> = [
        FamilySpec::Braid(4),
        FamilySpec::Catalan(3),
        FamilySpec::Shi(3),
        FamilySpec::Linial(4),
        FamilySpec::Generic { n: 6, d: 3 },
    ]
    .iter()
    .map(|s| make_family(s).unwrap())
    .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for i in 0..15 {
        out.push(random_arrangement(&mut rng, 1 + i % 3, 2 + i % 5, 5, 5));
    }
    out
}

#[test]
fn sequential_and_parallel_agree() {
    for a in suite() {
        let seq = enumerate_regions_seq(&a, RegionBudget::default()).unwrap();
        let par = enumerate_regions_par(&a, RegionBudget::default()).unwrap();
        assert_eq!(seq, par);
    }
}

#[test]
fn regions_are_sound() {
    for a in suite() {
        let regions = enumerate_regions_seq(&a, RegionBudget::default()).unwrap();
        let distinct: BTreeSet<_> = regions.iter().map(|r| r.signs.clone()).collect();
        assert_eq!(distinct.len(), regions.len());
        assert!(regions.windows(2).all(|w| w[0].signs < w[1].signs));
        for r in &regions {
            for (h, s) in a.hyperplanes().iter().zip(&r.signs) {
                assert_eq!(Sign::of(h, &r.sample), Some(*s));
            }
            assert_eq!(r.relatively_bounded, is_relatively_bounded(&a, &r.signs));
        }
        assert_eq!(counts_of(&regions), zaslavsky_counts(&a));
    }
}

#[test]
fn relative_boundedness_survives_essentialization() {
    for a in suite() {
        let e = a.essentialize().arrangement;
        let before = enumerate_regions_seq(&a, RegionBudget::default()).unwrap();
        let after = enumerate_regions_seq(&e, RegionBudget::default()).unwrap();
        assert_eq!(before.len(), after.len());
        for (x, y) in before.iter().zip(&after) {
            assert_eq!(x.signs, y.signs);
            assert_eq!(x.relatively_bounded, y.relatively_bounded);
        }
    }
}

#[test]
fn distance_counts_separating_hyperplanes() {
    for a in suite() {
        let regions = enumerate_regions_seq(&a, RegionBudget::default()).unwrap();
        let base = regions[regions.len() / 2].signs.clone();
        let g = adjacency_and_distance(&a, &regions, &base).unwrap();
        for (r, region) in regions.iter().enumerate() {
            let separating = region.signs.iter().zip(&base).filter(|(x, y)| x != y).count();
            assert_eq!(g.distance[r], separating);
            for &s in &g.adjacency[r] {
                assert!(g.adjacency[s].contains(&r));
                let differ = region
                    .signs
                    .iter()
                    .zip(&regions[s].signs)
                    .filter(|(x, y)| x != y)
                    .count();
                assert_eq!(differ, 1);
            }
        }
        let missing = vec![Sign::Plus; a.len() + 1];
        assert!(matches!(
            adjacency_and_distance(&a, &regions, &missing),
            Err(Error::BaseNotFound)
        ));
    }
}

#[test]
fn budgets_are_enforced() {
    let wide = make_family(&FamilySpec::Generic { n: 21, d: 2 }).unwrap();
    assert!(matches!(
        enumerate_regions_with(&wide, RegionBudget::default()),
        Err(Error::BudgetExceeded(_))
    ));
    let braid = make_family(&FamilySpec::Braid(4)).unwrap();
    let tight = RegionBudget {
        max_hyperplanes: 20,
        max_regions: 10,
    };
    assert!(matches!(
        enumerate_regions_seq(&braid, tight),
        Err(Error::BudgetExceeded(_))
    ));
}

#[test]
fn empty_and_point_arrangements() {
    let empty = Arrangement::empty(2);
    let regions = enumerate_regions_seq(&empty, RegionBudget::default()).unwrap();
    assert_eq!(regions.len(), 1);
    assert!(regions[0].relatively_bounded);
    let point = Arrangement::new(1, vec![Hyperplane::from_i64(&[2], 1).unwrap()]).unwrap();
    let regions = enumerate_regions_seq(&point, RegionBudget::default()).unwrap();
    assert_eq!(regions.len(), 2);
    assert!(regions.iter().all(|r| !r.relatively_bounded));
}

#[test]
fn regions_round_trip_through_json() {
    let a = make_family(&FamilySpec::Shi(3)).unwrap();
    let regions = enumerate_regions_seq(&a, RegionBudget::default()).unwrap();
    let json = serde_json::to_string(&regions).unwrap();
    let back: Vec<hyperarr::regions::Region> = serde_json::from_str(&json).unwrap();
    assert_eq!(back, regions);
    assert_eq!(serde_json::to_string(&back).unwrap(), json);
}
