//! Memoized dual recursion vs. brute-force Frobenius oracle.
//!
//! Run with `cargo bench -p hecke-bench`. The first oracle iteration warms
//! the process-wide Schur and Hall-Littlewood caches; criterion's warm-up
//! phase absorbs that.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use hecke_bench::{pairs_of_weight, worked_example, TABLE_SIZES};
use hecke_core::{character_table, dual_mn, frobenius_oracle, CharCache, Method};

fn bench_single_value(c: &mut Criterion) {
    let (lambda, mu) = worked_example();
    let mut group = c.benchmark_group("worked_example");
    group.bench_function("dual", |b| {
        b.iter(|| {
            // fresh memo per iteration: this times the full recursion
            let mut cache = CharCache::new();
            black_box(dual_mn(black_box(&lambda), black_box(&mu), &mut cache))
        })
    });
    group.bench_function("oracle", |b| {
        b.iter(|| black_box(frobenius_oracle(black_box(&lambda), black_box(&mu))))
    });
    group.finish();
}

fn bench_tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("character_table");
    group.sample_size(10);
    for n in TABLE_SIZES {
        group.bench_with_input(BenchmarkId::new("dual", n), &n, |b, &n| {
            b.iter(|| black_box(character_table(n, Method::Dual)))
        });
        group.bench_with_input(BenchmarkId::new("oracle", n), &n, |b, &n| {
            b.iter(|| black_box(character_table(n, Method::Oracle)))
        });
    }
    group.finish();
}

fn bench_full_sweep(c: &mut Criterion) {
    // every pair of weight 6 through one shared cache, mirroring how the
    // verification suites drive the recursion
    let pairs = pairs_of_weight(6);
    let mut group = c.benchmark_group("weight_six_sweep");
    group.sample_size(10);
    group.bench_function("dual_shared_cache", |b| {
        b.iter(|| {
            let mut cache = CharCache::new();
            for (lambda, mu) in &pairs {
                black_box(dual_mn(lambda, mu, &mut cache));
            }
        })
    });
    group.finish();
}

criterion_group!(benches, bench_single_value, bench_tables, bench_full_sweep);
criterion_main!(benches);
