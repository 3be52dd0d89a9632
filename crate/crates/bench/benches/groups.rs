use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use realforms_bench::heavy_groups;
use realforms_core::cohomology::{h1, stable_sylow2};
use realforms_core::cyclo::cyc_mat;
use realforms_core::invariants::m_invariant_with_aut;
use realforms_core::{automorphism_group, involution_class_reps};

fn automorphisms(c: &mut Criterion) {
    let mut group = c.benchmark_group("automorphism_group");
    group.sample_size(10);
    for g in heavy_groups() {
        group.bench_with_input(BenchmarkId::from_parameter(g.label()), &g, |b, g| {
            b.iter(|| automorphism_group(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn cohomology(c: &mut Criterion) {
    let mut group = c.benchmark_group("h1_all_classes");
    for g in heavy_groups() {
        let a = automorphism_group(&g).unwrap();
        let reps = involution_class_reps(&a);
        group.bench_with_input(BenchmarkId::from_parameter(g.label()), &g, |b, g| {
            b.iter(|| reps.iter().map(|r| h1(g, &r.action).h1_size).max())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("m_invariant");
    for g in heavy_groups() {
        let a = automorphism_group(&g).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(g.label()), &g, |b, g| {
            b.iter(|| m_invariant_with_aut(g, &a).unwrap().m_value)
        });
    }
    group.finish();
}

fn sylow(c: &mut Criterion) {
    let mut group = c.benchmark_group("stable_sylow2");
    group.sample_size(10);
    for g in heavy_groups() {
        let a = automorphism_group(&g).unwrap();
        let phi = involution_class_reps(&a).last().unwrap().action.clone();
        group.bench_with_input(BenchmarkId::from_parameter(g.label()), &g, |b, g| {
            b.iter(|| stable_sylow2(g, &phi).unwrap().summary.h1_size)
        });
    }
    group.finish();
}

fn matrices(c: &mut Criterion) {
    c.bench_function("cyc_mat(8,3)", |b| b.iter(|| cyc_mat(black_box(8), 3).unwrap().group().order()));
}

criterion_group!(benches, automorphisms, cohomology, sylow, matrices);
criterion_main!(benches);
