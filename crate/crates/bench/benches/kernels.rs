use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use hmorph::ar::{almost_split_sequence_ending_at, Caps};
use hmorph::module::{hom_basis, Module};
use hmorph::morph::{tau_h_once, tau_h_via_t2, HCatalog, MorphObject};
use hmorph_bench::{algebra, dense};

fn rref(c: &mut Criterion) {
    let mut g = c.benchmark_group("rref");
    for n in [16, 64, 128] {
        let m = dense(2, n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| black_box(m.rref())));
    }
    g.finish();
}

fn hom(c: &mut Criterion) {
    let alg = algebra("x4");
    let p = Module::projective(&alg, 0);
    c.bench_function("hom_basis Λ Λ over x4", |b| b.iter(|| black_box(hom_basis(&p, &p).unwrap())));
}

fn ar_sequence(c: &mut Criterion) {
    let alg = algebra("x4");
    let s = Module::simple(&alg, 0);
    c.bench_function("almost split sequence ending at S over x4", |b| {
        b.iter(|| black_box(almost_split_sequence_ending_at(&s).unwrap()))
    });
}

fn translate(c: &mut Criterion) {
    let alg = algebra("x3");
    let x = MorphObject::zero_to(&Module::simple(&alg, 0));
    c.bench_function("tau_H native over x3", |b| b.iter(|| black_box(tau_h_once(&x).unwrap())));
    c.bench_function("tau_H via T2 over x3", |b| b.iter(|| black_box(tau_h_via_t2(&x).unwrap())));
}

fn catalog(c: &mut Criterion) {
    let mut g = c.benchmark_group("H catalog");
    g.sample_size(10);
    for name in ["x2", "x3"] {
        let alg = algebra(name);
        g.bench_function(name, |b| b.iter(|| black_box(HCatalog::build(&alg, Caps::default()).unwrap())));
    }
    g.finish();
}

criterion_group!(benches, rref, hom, ar_sequence, translate, catalog);
criterion_main!(benches);
