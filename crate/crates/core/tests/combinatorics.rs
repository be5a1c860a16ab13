use std::collections::BTreeSet;

use hyperarr::arrangement::{make_family, FamilySpec};
use hyperarr::combinatorics::{
    acyclic_orientations, catalan_region_to_ballot, linial_region_formula, region_to_orientation, Graph,
};
use hyperarr::exact_math::int;
use hyperarr::regions::enumerate_regions;
use hyperarr::Error;

#[test]
fn regions_give_each_acyclic_orientation_once() {
    for n in 1..=4 {
        let pairs = n * (n - 1) / 2;
        for mask in 0..1u64 << pairs {
            let g = Graph::from_mask(n, mask);
            let regions = enumerate_regions(&make_family(&FamilySpec::Graphical(g.clone())).unwrap()).unwrap();
            let from_regions: BTreeSet<_> = regions.iter().map(|r| region_to_orientation(&g, r)).collect();
            let all: BTreeSet<_> = acyclic_orientations(&g).unwrap().into_iter().collect();
            assert_eq!(from_regions.len(), regions.len());
            assert_eq!(from_regions, all);
        }
    }
}

#[test]
fn orientation_follows_sample_order() {
    let g = Graph::complete(3);
    for r in enumerate_regions(&make_family(&FamilySpec::Graphical(g.clone())).unwrap()).unwrap() {
        for &(a, b) in &region_to_orientation(&g, &r).arcs {
            assert!(r.sample[a - 1] < r.sample[b - 1]);
        }
    }
}

#[test]
fn linial_region_formula_matches_enumeration() {
    for n in 1..=5 {
        let regions = enumerate_regions(&make_family(&FamilySpec::Linial(n)).unwrap()).unwrap();
        assert_eq!(linial_region_formula(n), int(regions.len() as i64));
    }
}

#[test]
fn ballot_map_rejects_foreign_regions() {
    let shi = enumerate_regions(&make_family(&FamilySpec::Shi(2)).unwrap()).unwrap();
    assert_eq!(catalan_region_to_ballot(2, &shi[0]), Err(Error::NotInBaseChamber));
}

#[test]
fn graph_text_format() {
    let g = Graph::parse("# path\nvertices 3\n1 2\n2 3\n").unwrap();
    assert_eq!(g, Graph::path(3));
    assert!(Graph::parse("vertices 2\n1 3\n").is_err());
}
