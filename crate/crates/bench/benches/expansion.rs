use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use tropexp_bench::{corpus_models, interior_point, layered};
use tropexp_core::linalg::smith_normal_form;
use tropexp_core::{rubber_report, IntMatrix};

fn corpus(c: &mut Criterion) {
    let models = corpus_models();
    let mut group = c.benchmark_group("corpus");
    for (name, model) in &models {
        let e = &model.expansion;
        group.bench_with_input(BenchmarkId::new("validate", name), e, |b, e| {
            b.iter(|| e.validate())
        });
        group.bench_with_input(BenchmarkId::new("rubber", name), e, |b, e| {
            b.iter(|| rubber_report(e).unwrap())
        });
        let f = interior_point(e);
        group.bench_with_input(BenchmarkId::new("fibre", name), e, |b, e| {
            b.iter(|| e.fibre(black_box(&f)).unwrap())
        });
    }
    group.finish();
}

fn scaling(c: &mut Criterion) {
    let mut group = c.benchmark_group("layered");
    group.sample_size(10);
    for cuts in [1, 3, 5] {
        let e = layered(2, cuts);
        group.bench_with_input(BenchmarkId::new("validate", cuts), &e, |b, e| {
            b.iter(|| e.validate())
        });
        group.bench_with_input(BenchmarkId::new("rubber", cuts), &e, |b, e| {
            b.iter(|| rubber_report(e).unwrap())
        });
    }
    group.finish();
}

fn snf(c: &mut Criterion) {
    let rows: Vec<Vec<i64>> = (0..8)
        .map(|i| (0..8).map(|j| ((i * 7 + j * 13) % 11) as i64 - 5).collect())
        .collect();
    let m = IntMatrix::from_rows(&rows);
    c.bench_function("smith_normal_form_8x8", |b| {
        b.iter(|| smith_normal_form(black_box(&m)))
    });
}

criterion_group!(benches, corpus, scaling, snf);
criterion_main!(benches);
