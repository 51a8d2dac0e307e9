use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use tableau_trails::{column_insert, fused_insert, row_insert, run_sweep, SweepOptions};
use tableau_trails_bench::staircase;

fn single_insertions(c: &mut Criterion) {
    let mut group = c.benchmark_group("single");
    for k in [8, 32, 128] {
        let t = staircase(k);
        let v = (k * k) as u32 | 1;
        group.bench_with_input(BenchmarkId::new("row_insert", k), &t, |b, t| {
            b.iter(|| row_insert(black_box(t), black_box(v)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("column_insert", k), &t, |b, t| {
            b.iter(|| column_insert(black_box(v), black_box(t)).unwrap())
        });
    }
    group.finish();
}

fn two_insertions(c: &mut Criterion) {
    let mut group = c.benchmark_group("pair");
    for k in [8, 32, 128] {
        let t = staircase(k);
        let x = (k * k) as u32 | 1;
        let y = x + 2;
        group.bench_with_input(BenchmarkId::new("fused", k), &t, |b, t| {
            b.iter(|| fused_insert(black_box(t), x, y).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("column_then_row", k), &t, |b, t| {
            b.iter(|| {
                let (u, _) = column_insert(x, black_box(t)).unwrap();
                row_insert(&u, y).unwrap()
            })
        });
        group.bench_with_input(BenchmarkId::new("row_then_column", k), &t, |b, t| {
            b.iter(|| {
                let (u, _) = row_insert(black_box(t), y).unwrap();
                column_insert(x, &u).unwrap()
            })
        });
    }
    group.finish();
}

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for max_n in [4, 6] {
        let opts = SweepOptions {
            workers: 1,
            ..SweepOptions::new(max_n)
        };
        group.bench_with_input(BenchmarkId::from_parameter(max_n), &opts, |b, opts| {
            b.iter(|| run_sweep(opts))
        });
    }
    group.finish();
}

criterion_group!(benches, single_insertions, two_insertions, sweep);
criterion_main!(benches);
