use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hyperarr::arrangement::{make_family, FamilySpec};
use hyperarr::combinatorics::{
    count_acyclic_orientations_par, count_acyclic_orientations_seq, enumerate_parking_functions_par,
    enumerate_parking_functions_seq, Graph,
};
use hyperarr::poset::{count_complement_points_par, count_complement_points_seq, DEFAULT_POINT_BUDGET};
use hyperarr::regions::{enumerate_regions_par, enumerate_regions_seq, RegionBudget};

fn point_counts(c: &mut Criterion) {
    let mut group = c.benchmark_group("complement_points");
    let a = make_family(&FamilySpec::Braid(5)).unwrap();
    for p in [11u64, 17] {
        group.bench_with_input(BenchmarkId::new("seq", p), &p, |b, &p| {
            b.iter(|| count_complement_points_seq(&a, p, DEFAULT_POINT_BUDGET).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("par", p), &p, |b, &p| {
            b.iter(|| count_complement_points_par(&a, p, DEFAULT_POINT_BUDGET).unwrap())
        });
    }
    group.finish();
}

fn regions(c: &mut Criterion) {
    let mut group = c.benchmark_group("regions");
    group.sample_size(10);
    for spec in [FamilySpec::Shi(4), FamilySpec::Catalan(3)] {
        let a = make_family(&spec).unwrap();
        group.bench_with_input(BenchmarkId::new("seq", spec.name()), &a, |b, a| {
            b.iter(|| enumerate_regions_seq(a, RegionBudget::default()).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("par", spec.name()), &a, |b, a| {
            b.iter(|| enumerate_regions_par(a, RegionBudget::default()).unwrap())
        });
    }
    group.finish();
}

fn brute_force(c: &mut Criterion) {
    let mut group = c.benchmark_group("brute_force");
    let k6 = Graph::complete(6);
    group.bench_function("acyclic_k6/seq", |b| {
        b.iter(|| count_acyclic_orientations_seq(&k6).unwrap())
    });
    group.bench_function("acyclic_k6/par", |b| {
        b.iter(|| count_acyclic_orientations_par(&k6).unwrap())
    });
    group.bench_function("parking_6/seq", |b| {
        b.iter(|| enumerate_parking_functions_seq(6).unwrap())
    });
    group.bench_function("parking_6/par", |b| {
        b.iter(|| enumerate_parking_functions_par(6).unwrap())
    });
    group.finish();
}

criterion_group!(benches, point_counts, regions, brute_force);
criterion_main!(benches);
