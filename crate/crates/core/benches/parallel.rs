//! Data-parallel kernels against their sequential baselines.

use criterion::{criterion_group, criterion_main, Criterion};

use loop_core::autotopy::{automorphism_group, autotopism_group, autotopism_group_seq};
use loop_core::catalog;
use loop_core::enumerate::{reduced_loops, reduced_loops_seq};
use loop_core::holomorph::build_holomorph;
use loop_core::verify::{holomorph_osborn_on, osborn_check, osborn_check_seq, OsbornVariant};
use loop_core::Limits;

fn bench_enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_order6");
    g.sample_size(10);
    g.bench_function("seq", |b| b.iter(|| reduced_loops_seq(6).len()));
    g.bench_function("par", |b| b.iter(|| reduced_loops(6).len()));
    g.finish();
}

fn bench_osborn_scan(c: &mut Criterion) {
    let limits = Limits::default();
    let d4 = catalog::dihedral_4();
    let aum = automorphism_group(&d4, &limits).unwrap();
    let h = build_holomorph(&d4, &aum).unwrap();
    let table = h.table().clone();
    let mut g = c.benchmark_group("osborn_scan_order64");
    g.sample_size(20);
    g.bench_function("seq", |b| {
        b.iter(|| osborn_check_seq(&table, OsbornVariant::Eq1).holds())
    });
    g.bench_function("par", |b| {
        b.iter(|| osborn_check(&table, OsbornVariant::Eq1).holds())
    });
    g.finish();
}

fn bench_autotopism_search(c: &mut Criterion) {
    let limits = Limits::default();
    let z6 = catalog::cyclic(6);
    let mut g = c.benchmark_group("autotopism_group_z6");
    g.sample_size(10);
    g.bench_function("seq", |b| b.iter(|| autotopism_group_seq(&z6, &limits).unwrap().len()));
    g.bench_function("par", |b| b.iter(|| autotopism_group(&z6, &limits).unwrap().len()));
    g.finish();
}

fn bench_holomorph_direct(c: &mut Criterion) {
    let limits = Limits::default();
    let q8 = catalog::quaternion_8();
    let aum = automorphism_group(&q8, &limits).unwrap();
    let h = build_holomorph(&q8, &aum).unwrap();
    let mut g = c.benchmark_group("holomorph_osborn_order192");
    g.sample_size(10);
    g.bench_function("par", |b| b.iter(|| holomorph_osborn_on(&h).holds()));
    g.finish();
}

criterion_group!(
    benches,
    bench_enumeration,
    bench_osborn_scan,
    bench_autotopism_search,
    bench_holomorph_direct
);
criterion_main!(benches);
