use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use threegap_bench::alphas;
use threegap_core::{
    build_config_incremental, build_config_oracle, check_symmetry_theorem, frac_mult,
    IncrementalEngine,
};

fn bench_builders(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_config");
    for n in [1_000usize, 10_000, 100_000] {
        group.throughput(Throughput::Elements(n as u64));
        for (name, alpha) in alphas() {
            group.bench_with_input(BenchmarkId::new(format!("incremental/{name}"), n), &n, |b, &n| {
                b.iter(|| build_config_incremental(black_box(&alpha), n).unwrap())
            });
            if n <= 10_000 {
                group.bench_with_input(BenchmarkId::new(format!("oracle/{name}"), n), &n, |b, &n| {
                    b.iter(|| build_config_oracle(black_box(&alpha), n).unwrap())
                });
            }
        }
    }
    group.finish();
}

fn bench_advance(c: &mut Criterion) {
    let (_, alpha) = alphas().remove(0);
    c.bench_function("advance/sqrt:2/from_10^5", |b| {
        let mut engine = IncrementalEngine::new(&alpha);
        for _ in 1..100_000 {
            engine.advance();
        }
        b.iter(|| black_box(engine.advance()))
    });
}

fn bench_primitives(c: &mut Criterion) {
    let (_, alpha) = alphas().remove(0);
    c.bench_function("frac_mult/sqrt:2/m=10^6", |b| {
        b.iter(|| frac_mult(black_box(&alpha), black_box(1_000_000)))
    });
    let word = build_config_incremental(&alpha, 100_000).unwrap().word().clone();
    c.bench_function("symmetry/sqrt:2/N=10^5", |b| {
        b.iter(|| check_symmetry_theorem(black_box(&word)))
    });
}

criterion_group!(benches, bench_builders, bench_advance, bench_primitives);
criterion_main!(benches);
