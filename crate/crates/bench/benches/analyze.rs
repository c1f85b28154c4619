use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use corona_bench::{joined_long_cycles, sparse_instance, SIZES};
use corona_core::analyze;
use corona_core::matching::maximum_matching;

fn analysis(c: &mut Criterion) {
    let mut group = c.benchmark_group("analyze");
    group.sample_size(10);
    for n in SIZES {
        let g = sparse_instance(n, 9);
        group.bench_with_input(BenchmarkId::new("sparse", n), &g, |b, g| {
            b.iter(|| analyze(g, false).unwrap())
        });
        let g = joined_long_cycles(n);
        group.bench_with_input(BenchmarkId::new("joined-cycles", n), &g, |b, g| {
            b.iter(|| analyze(g, false).unwrap())
        });
    }
    group.finish();
}

fn matching(c: &mut Criterion) {
    let mut group = c.benchmark_group("blossom");
    for n in SIZES {
        let g = sparse_instance(n, 9);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| maximum_matching(g))
        });
    }
    group.finish();
}

criterion_group!(benches, analysis, matching);
criterion_main!(benches);
