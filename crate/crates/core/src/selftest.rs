//! The acceptance criteria as a runnable suite, shared by the command-line
//! `selftest` and the test harness.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arrangement::{make_family, random_arrangement, random_graph, Arrangement, FamilySpec, Hyperplane};
use crate::combinatorics::{
    catalan_region_to_ballot, chromatic_by_deletion_contraction, chromatic_polynomial, count_acyclic_orientations,
    count_alternating_trees, count_proper_colorings, enumerate_ballot_sequences, enumerate_parking_functions,
    has_positive_partial_sums, in_base_chamber, is_ballot, is_parking_function, is_parking_function_sorted,
    linial_chi_formula, pak_labeling, shi_base_signs, tree_inversion_histogram, Graph,
};
use crate::error::Error;
use crate::exact_math::{int, poly_roots_numeric, Polynomial};
use crate::orlik_solomon::{graded_dimensions, hilbert_from_chi, hilbert_polynomial};
use crate::poset::{
    build_poset, chi_via_deletion_contraction, chi_via_finite_field, chi_via_mobius, count_complement_points,
    good_primes, DEFAULT_POINT_BUDGET,
};
use crate::regions::{adjacency_and_distance, counts_of, enumerate_regions, zaslavsky_counts, RegionCounts};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionOutcome {
    pub id: usize,
    pub title: String,
    pub passed: bool,
    pub detail: String,
}

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lift<T>(r: crate::Result<T>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn family(spec: FamilySpec) -> Result<Arrangement, String> {
    lift(make_family(&spec), "family")
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn catalan(n: u64) -> u64 {
    binomial(2 * n, n) / (n + 1)
}

/// `Π (t - r)` over the given roots.
fn product_of_roots(roots: impl IntoIterator<Item = i64>) -> Polynomial {
    roots.into_iter().fold(Polynomial::constant(int(1)), |acc, r| {
        &acc * &Polynomial::linear(int(r))
    })
}

pub fn three_lines() -> Arrangement {
    Arrangement::new(
        2,
        vec![
            Hyperplane::from_i64(&[1, 0], 0).expect("nonzero"),
            Hyperplane::from_i64(&[0, 1], 0).expect("nonzero"),
            Hyperplane::from_i64(&[1, 1], 1).expect("nonzero"),
        ],
    )
    .expect("distinct")
}

pub fn four_lines() -> Arrangement {
    Arrangement::new(
        2,
        vec![
            Hyperplane::from_i64(&[1, 0], 0).expect("nonzero"),
            Hyperplane::from_i64(&[0, 1], 0).expect("nonzero"),
            Hyperplane::from_i64(&[1, 1], 0).expect("nonzero"),
            Hyperplane::from_i64(&[1, -1], 1).expect("nonzero"),
        ],
    )
    .expect("distinct")
}

/// Every family instance named by the criteria.
pub fn family_instances() -> Vec<FamilySpec> {
    let mut out = Vec::new();
    out.extend((1..=8).map(|n| FamilySpec::Generic { n, d: 2 }));
    out.extend((1..=6).map(|n| FamilySpec::Generic { n, d: 3 }));
    out.extend((2..=5).map(FamilySpec::Braid));
    out.extend((2..=4).map(FamilySpec::Catalan));
    out.extend((2..=4).map(FamilySpec::Shi));
    out.extend((2..=5).map(FamilySpec::Linial));
    out
}

/// All graphs on 1 to 4 vertices, one per edge subset.
pub fn small_graphs() -> Vec<Graph> {
    (1..=4usize)
        .flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (0..1u64 << pairs).map(move |m| Graph::from_mask(n, m))
        })
        .collect()
}

fn check_counts(what: &str, got: RegionCounts, regions: u64, bounded: u64) -> Result<(), String> {
    ensure(got.regions == regions && got.bounded == bounded, || {
        format!(
            "{what}: got ({}, {}), expected ({regions}, {bounded})",
            got.regions, got.bounded
        )
    })
}

fn criterion_1() -> Check {
    let mut checked = 0;
    for (d, max_n) in [(2u64, 8u64), (3, 6)] {
        for n in 1..=max_n {
            let a = family(FamilySpec::Generic {
                n: n as usize,
                d: d as usize,
            })?;
            let regions = lift(enumerate_regions(&a), "regions")?;
            let r: u64 = (0..=d).map(|k| binomial(n, k)).sum();
            let b: i64 = (0..=d)
                .map(|k| if (d - k) % 2 == 0 { 1 } else { -1 } * binomial(n, k) as i64)
                .sum();
            check_counts(&format!("generic({n},{d})"), counts_of(&regions), r, b as u64)?;
            checked += 1;
        }
    }
    Ok(format!("{checked} generic arrangements enumerated"))
}

fn criterion_2() -> Check {
    let a = three_lines();
    let expected = Polynomial::from_i64(&[3, -3, 1]);
    let ff = lift(chi_via_finite_field(&a, DEFAULT_POINT_BUDGET), "finite field")?.polynomial;
    for (name, chi) in [
        ("mobius", chi_via_mobius(&a)),
        ("deletion-contraction", chi_via_deletion_contraction(&a)),
        ("finite field", ff),
    ] {
        ensure(chi == expected, || format!("{name} gives {chi}"))?;
    }
    check_counts("regions", counts_of(&lift(enumerate_regions(&a), "regions")?), 7, 1)?;
    Ok("chi = t^2 - 3t + 3 by three methods; 7 regions, 1 bounded".into())
}

fn criterion_3() -> Check {
    for n in 2..=5u64 {
        let a = family(FamilySpec::Braid(n as usize))?;
        let chi = chi_via_mobius(&a);
        let expected = product_of_roots(0..n as i64);
        ensure(chi == expected, || format!("braid({n}): chi = {chi}"))?;
        check_counts(&format!("braid({n}) zaslavsky"), zaslavsky_counts(&a), factorial(n), 0)?;
        if n <= 4 {
            let regions = lift(enumerate_regions(&a), "regions")?;
            check_counts(&format!("braid({n}) enumeration"), counts_of(&regions), factorial(n), 0)?;
            let perms: BTreeSet<Vec<usize>> = regions
                .iter()
                .map(|r| {
                    let mut order: Vec<usize> = (0..n as usize).collect();
                    order.sort_by(|&i, &j| r.sample[i].cmp(&r.sample[j]));
                    order
                })
                .collect();
            ensure(perms.len() as u64 == factorial(n), || {
                format!("braid({n}): {} distinct permutations", perms.len())
            })?;
        }
    }
    Ok("braid n = 2..5".into())
}

fn check_graph(g: &Graph) -> Result<(), String> {
    let name = format!("graph {:?} on {} vertices", g.edges(), g.n());
    let chi = lift(chromatic_polynomial(g), &name)?;
    let by_graph = chromatic_by_deletion_contraction(g);
    ensure(chi == by_graph, || format!("{name}: {chi} vs {by_graph}"))?;
    for k in 2..=4u64 {
        let colorings = count_proper_colorings(g, k);
        ensure(int(colorings as i64) == chi.eval_i64(k as i64), || {
            format!("{name}: {colorings} colorings with {k} colors")
        })?;
    }
    let acyclic = lift(count_acyclic_orientations(g), &name)?;
    let mut stanley = chi.eval_i64(-1);
    if g.n() % 2 == 1 {
        stanley = -stanley;
    }
    let regions = lift(enumerate_regions(&family(FamilySpec::Graphical(g.clone()))?), &name)?;
    ensure(
        int(acyclic as i64) == stanley && acyclic == regions.len() as u64,
        || {
            format!(
                "{name}: {acyclic} acyclic, (-1)^n chi(-1) = {stanley}, {} regions",
                regions.len()
            )
        },
    )
}

fn criterion_4() -> Check {
    let graphs = small_graphs();
    for g in &graphs {
        check_graph(g)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..20 {
        let n = rng.random_range(1..=6);
        check_graph(&random_graph(&mut rng, n))?;
    }
    Ok(format!("{} small graphs and 20 random graphs", graphs.len()))
}

fn criterion_5() -> Check {
    for n in 2..=4u64 {
        let a = family(FamilySpec::Catalan(n as usize))?;
        let chi = chi_via_mobius(&a);
        let expected = product_of_roots(std::iter::once(0).chain(n as i64 + 1..=2 * n as i64 - 1));
        ensure(chi == expected, || format!("catalan({n}): chi = {chi}"))?;
        let regions_expected = factorial(n) * catalan(n);
        let bounded_expected = factorial(n) * catalan(n - 1);
        check_counts(
            &format!("catalan({n}) zaslavsky"),
            zaslavsky_counts(&a),
            regions_expected,
            bounded_expected,
        )?;
        let regions = lift(enumerate_regions(&a), "regions")?;
        check_counts(
            &format!("catalan({n}) enumeration"),
            counts_of(&regions),
            regions_expected,
            bounded_expected,
        )?;

        let chamber: Vec<_> = regions.iter().filter(|r| in_base_chamber(n as usize, r)).collect();
        ensure(chamber.len() as u64 * factorial(n) == regions.len() as u64, || {
            format!("catalan({n}): {} chamber regions", chamber.len())
        })?;
        let mut ballots = BTreeSet::new();
        for r in &chamber {
            let b = lift(catalan_region_to_ballot(n as usize, r), "ballot")?;
            ensure(is_ballot(&b), || {
                format!("catalan({n}): {b:?} is not a ballot sequence")
            })?;
            ensure(has_positive_partial_sums(&b) == r.relatively_bounded, || {
                format!("catalan({n}): boundedness of {b:?} disagrees")
            })?;
            ballots.insert(b);
        }
        let all: BTreeSet<Vec<i8>> = enumerate_ballot_sequences(n as usize).into_iter().collect();
        ensure(ballots == all && all.len() as u64 == catalan(n), || {
            format!(
                "catalan({n}): {} ballots from {} chamber regions",
                ballots.len(),
                chamber.len()
            )
        })?;
    }
    Ok("catalan n = 2..4 with ballot bijection".into())
}

fn criterion_6() -> Check {
    for n in 2..=4u64 {
        let a = family(FamilySpec::Shi(n as usize))?;
        let chi = chi_via_mobius(&a);
        let expected = &Polynomial::monomial(1) * &Polynomial::linear(int(n as i64)).pow(n as usize - 1);
        ensure(chi == expected, || format!("shi({n}): chi = {chi}"))?;
        let r = (n + 1).pow(n as u32 - 1);
        let b = (n - 1).pow(n as u32 - 1);
        check_counts(&format!("shi({n}) zaslavsky"), zaslavsky_counts(&a), r, b)?;
        let pak = lift(pak_labeling(n as usize), "pak")?;
        check_counts(&format!("shi({n}) enumeration"), counts_of(&pak.regions), r, b)?;
        let labels: BTreeSet<Vec<usize>> = pak.labels.iter().cloned().collect();
        let parking: BTreeSet<Vec<usize>> = lift(enumerate_parking_functions(n as usize), "parking")?
            .into_iter()
            .collect();
        ensure(
            labels.len() == pak.regions.len() && labels == parking && parking.len() as u64 == r,
            || format!("shi({n}): {} labels, {} parking functions", labels.len(), parking.len()),
        )?;
    }
    for n in 1..=5usize {
        let total = n.pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let seq: Vec<usize> = (0..n)
                .map(|_| {
                    let v = c % n + 1;
                    c /= n;
                    v
                })
                .collect();
            ensure(is_parking_function(&seq) == is_parking_function_sorted(&seq), || {
                format!("simulation and sorted criterion disagree on {seq:?}")
            })?;
        }
    }
    Ok("shi n = 2..4, Pak labels bijective; parking criteria agree for n <= 5".into())
}

fn criterion_7() -> Check {
    for n in 2..=4usize {
        let a = family(FamilySpec::Shi(n))?;
        let regions = lift(enumerate_regions(&a), "regions")?;
        let graph = lift(adjacency_and_distance(&a, &regions, &shi_base_signs(n)), "distance")?;
        let dist = graph.distance_histogram();
        let trees = lift(tree_inversion_histogram(n), "trees")?;
        let top = n * (n - 1) / 2;
        for k in 0..=top {
            let regions_at_k = dist.get(k).copied().unwrap_or(0);
            ensure(regions_at_k == trees[top - k], || {
                format!(
                    "kreweras n={n}, k={k}: {regions_at_k} regions vs {} trees",
                    trees[top - k]
                )
            })?;
        }
        ensure(dist.len() <= top + 1, || {
            format!("kreweras n={n}: distance beyond C(n,2)")
        })?;
    }
    Ok("distance and inversion histograms agree for n = 2..4".into())
}

fn criterion_8() -> Check {
    for n in 2..=5usize {
        let a = family(FamilySpec::Linial(n))?;
        let formula = linial_chi_formula(n);
        let chi = chi_via_mobius(&a);
        ensure(formula == chi, || {
            format!("linial({n}): formula {formula}, poset {chi}")
        })?;
        let trees = lift(count_alternating_trees(n), "trees")?;
        let regions = lift(enumerate_regions(&a), "regions")?.len() as u64;
        ensure(trees == regions, || {
            format!("linial({n}): {trees} trees, {regions} regions")
        })?;
        if n == 3 {
            ensure(regions == 7, || format!("linial(3): {regions} regions"))?;
        }
    }
    let mut worst = 0f64;
    for n in 2..=8usize {
        let reduced = linial_chi_formula(n).div_by_t().ok_or("chi(0) != 0")?;
        let roots = lift(poly_roots_numeric(&reduced), "roots")?;
        for z in roots {
            worst = worst.max((z.re - n as f64 / 2.0).abs());
        }
    }
    ensure(worst < 1e-6, || format!("max |Re - n/2| = {worst:e}"))?;
    Ok(format!("linial n = 2..5; roots for n <= 8 within {worst:.1e} of n/2"))
}

fn criterion_9() -> Check {
    let mut instances: Vec<(String, Arrangement)> = vec![("three lines".into(), three_lines())];
    for spec in family_instances() {
        instances.push((spec.name(), family(spec)?));
    }
    for g in small_graphs() {
        let spec = FamilySpec::Graphical(g);
        instances.push((spec.name(), family(spec)?));
    }
    let (mut checked, mut skipped) = (0, Vec::new());
    for (name, a) in &instances {
        let primes = match good_primes(a, 3, DEFAULT_POINT_BUDGET) {
            Ok(p) => p,
            Err(Error::BudgetExceeded(_)) => {
                skipped.push(name.clone());
                continue;
            }
            Err(e) => return Err(format!("{name}: {e}")),
        };
        let chi = chi_via_mobius(a);
        for p in primes {
            let count = lift(count_complement_points(a, p, DEFAULT_POINT_BUDGET), name)?;
            ensure(int(count as i64) == chi.eval_i64(p as i64), || {
                format!("{name}: {count} points mod {p}, chi({p}) = {}", chi.eval_i64(p as i64))
            })?;
        }
        checked += 1;
    }
    Ok(format!(
        "{checked} instances at 3 good primes; over budget: {}",
        if skipped.is_empty() {
            "none".into()
        } else {
            skipped.join(", ")
        }
    ))
}

fn criterion_10() -> Check {
    let dims = lift(graded_dimensions(&four_lines()), "four lines")?;
    ensure(dims == [1, 4, 5], || format!("four-line example: {dims:?}"))?;
    let mut checked = 0;
    for spec in family_instances() {
        let a = family(spec.clone())?;
        if a.len() > 10 {
            continue;
        }
        let hilb = lift(hilbert_polynomial(&a), &spec.name())?;
        let expected = hilbert_from_chi(&chi_via_mobius(&a), a.dim());
        ensure(hilb == expected, || format!("{}: {hilb} vs {expected}", spec.name()))?;
        checked += 1;
    }
    Ok(format!("(1, 4, 5) for the four-line example; {checked} families match"))
}

fn criterion_11() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut coloops = 0;
    for trial in 0..20 {
        let d = rng.random_range(1..=3);
        let n = rng.random_range(1..=5);
        let a = random_arrangement(&mut rng, d, n, 5, 5);
        let chi = chi_via_mobius(&a);
        let counts = counts_of(&lift(enumerate_regions(&a), "regions")?);
        for h in 0..a.len() {
            let del = lift(a.delete(h), "delete")?;
            let con = lift(a.contract(h), "contract")?;
            let rhs = &chi_via_mobius(&del) - &chi_via_mobius(&con);
            ensure(chi == rhs, || format!("trial {trial}, H{h}: chi {chi} vs {rhs}"))?;
            let cd = counts_of(&lift(enumerate_regions(&del), "regions")?);
            let cc = counts_of(&lift(enumerate_regions(&con), "regions")?);
            ensure(counts.regions == cd.regions + cc.regions, || {
                format!(
                    "trial {trial}, H{h}: r = {} vs {} + {}",
                    counts.regions, cd.regions, cc.regions
                )
            })?;
            // A coloop cuts every region of A - H, so no region of A is bounded.
            if del.rank() == a.rank() {
                ensure(counts.bounded == cd.bounded + cc.bounded, || {
                    format!(
                        "trial {trial}, H{h}: a = {} vs {} + {}",
                        counts.bounded, cd.bounded, cc.bounded
                    )
                })?;
            } else {
                ensure(counts.bounded == 0 && cd.bounded == cc.bounded, || {
                    format!(
                        "trial {trial}, H{h}: coloop with a = {}, {} and {}",
                        counts.bounded, cd.bounded, cc.bounded
                    )
                })?;
                coloops += 1;
            }
        }
    }
    Ok(format!(
        "20 random arrangements, every hyperplane; bounded identity replaced at {coloops} coloops"
    ))
}

fn criterion_12() -> Check {
    let specs = (2..=4).map(FamilySpec::Braid).chain((2..=3).map(FamilySpec::Shi));
    for spec in specs {
        let a = family(spec.clone())?;
        let e = a.essentialize();
        let (p, q) = (build_poset(&a), build_poset(&e.arrangement));
        ensure(
            p.signature() == q.signature() && p.order_by_hyperplanes() == q.order_by_hyperplanes(),
            || format!("{}: posets differ", spec.name()),
        )?;
        let before = counts_of(&lift(enumerate_regions(&a), "regions")?);
        let after = counts_of(&lift(enumerate_regions(&e.arrangement), "regions")?);
        ensure(before == after, || format!("{}: {before:?} vs {after:?}", spec.name()))?;
    }
    Ok("braid n <= 4 and shi n <= 3".into())
}

pub const TITLES: [&str; 12] = [
    "generic arrangement counts",
    "worked three-line example",
    "braid arrangement",
    "graphical arrangements",
    "catalan arrangement",
    "shi arrangement and parking functions",
    "kreweras distance/inversion identity",
    "linial arrangement",
    "finite field method",
    "orlik-solomon algebra",
    "deletion-contraction identities",
    "essentialization",
];

/// Runs criterion `id` (1-based).
pub fn run(id: usize) -> CriterionOutcome {
    let result = match id {
        1 => criterion_1(),
        2 => criterion_2(),
        3 => criterion_3(),
        4 => criterion_4(),
        5 => criterion_5(),
        6 => criterion_6(),
        7 => criterion_7(),
        8 => criterion_8(),
        9 => criterion_9(),
        10 => criterion_10(),
        11 => criterion_11(),
        12 => criterion_12(),
        _ => Err(format!("no criterion {id}")),
    };
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CriterionOutcome {
        id,
        title: TITLES.get(id.wrapping_sub(1)).copied().unwrap_or("unknown").to_string(),
        passed,
        detail,
    }
}

pub fn run_all() -> Vec<CriterionOutcome> {
    (1..=TITLES.len()).map(run).collect()
}
