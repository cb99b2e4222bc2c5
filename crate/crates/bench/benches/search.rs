//! Benchmarks for the hot paths: axiom verification, biased-graph matroid
//! extraction, canonical codes, and the framework searches.

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use quasigraph_bench::{doubled_triangle, signed_k4, wheel_matroid};
use quasigraph_core::{
    enumerate_frameworks, enumerate_frameworks_naive, verify_framework, EnumOptions, Matroid,
};

fn verify_axioms(c: &mut Criterion) {
    let h = doubled_triangle();
    let n = Matroid::uniform(3, 6);
    c.bench_function("verify doubled triangle / U(3,6)", |b| {
        b.iter(|| verify_framework(black_box(&h), black_box(&n)))
    });
}

fn biased_graph_matroids(c: &mut Criterion) {
    let bias = signed_k4();
    c.bench_function("frame matroid of signed K4", |b| {
        b.iter(|| black_box(&bias).frame_matroid().expect("within limits"))
    });
    c.bench_function("lift matroid of signed K4", |b| {
        b.iter(|| black_box(&bias).lift_matroid().expect("within limits"))
    });
}

fn canonical_codes(c: &mut Criterion) {
    let h = doubled_triangle();
    c.bench_function("canonical labeled code of the doubled triangle", |b| {
        b.iter(|| black_box(&h).canonical_labeled_code())
    });
    c.bench_function("cycle matroid of the rank-4 wheel", |b| b.iter(wheel_matroid));
}

fn searches(c: &mut Criterion) {
    let opts = EnumOptions::default();
    let u36 = Matroid::uniform(3, 6);
    let mut group = c.benchmark_group("enumeration");
    group.sample_size(20);
    group.bench_function("U(3,6) pruned", |b| {
        b.iter(|| enumerate_frameworks(black_box(&u36), &opts).expect("within limits"))
    });
    let u24 = Matroid::uniform(2, 4);
    group.bench_function("U(2,4) naive", |b| {
        b.iter(|| enumerate_frameworks_naive(black_box(&u24), &opts).expect("within limits"))
    });
    let u26 = Matroid::uniform(2, 6);
    group.bench_function("U(2,6) pruned", |b| {
        b.iter(|| enumerate_frameworks(black_box(&u26), &opts).expect("within limits"))
    });
    group.finish();
}

criterion_group!(
    benches,
    verify_axioms,
    biased_graph_matroids,
    canonical_codes,
    searches
);
criterion_main!(benches);
