use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use lscoinv_bench::ls_input;
use lscoinv_core::verify::cocharge_kostka_oracle;
use lscoinv_core::{char_table, ls_factorize, partition, pl_matrix, WeylType};

fn bench_char_table(c: &mut Criterion) {
    let mut g = c.benchmark_group("char_table");
    for wt in [WeylType::a(6), WeylType::b(4)] {
        g.bench_with_input(BenchmarkId::from_parameter(wt), &wt, |b, &wt| b.iter(|| char_table(black_box(wt))));
    }
    g.finish();
}

fn bench_pl_matrix(c: &mut Criterion) {
    let mut g = c.benchmark_group("pl_matrix");
    for wt in [WeylType::a(5), WeylType::b(3), WeylType::b(4)] {
        g.bench_with_input(BenchmarkId::from_parameter(wt), &wt, |b, &wt| b.iter(|| pl_matrix(black_box(wt))));
    }
    g.finish();
}

fn bench_ls_factorize(c: &mut Criterion) {
    let mut g = c.benchmark_group("ls_factorize");
    g.sample_size(10);
    for wt in [WeylType::b(3), WeylType::b(4)] {
        let (p, poset) = ls_input(wt);
        g.bench_function(BenchmarkId::from_parameter(wt), |b| b.iter(|| ls_factorize(black_box(&p), &poset).unwrap()));
    }
    g.finish();
}

fn bench_cocharge(c: &mut Criterion) {
    let shape = partition![3, 2, 1];
    let weight = partition![1, 1, 1, 1, 1, 1];
    c.bench_function("cocharge_oracle (3,2,1)/(1^6)", |b| {
        b.iter(|| cocharge_kostka_oracle(black_box(&shape), black_box(&weight)))
    });
}

criterion_group!(benches, bench_char_table, bench_pl_matrix, bench_ls_factorize, bench_cocharge);
criterion_main!(benches);
