use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use oddspan::sweep::{packing_exhaustive, split_exhaustive, trifree_exhaustive, Executor};

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("labeled-sweep");
    group.sample_size(10);
    for exec in [Executor::Sequential, Executor::Parallel] {
        let label = format!("{exec:?}");
        group.bench_with_input(BenchmarkId::new("trifree-n6", &label), &exec, |b, &e| {
            b.iter(|| trifree_exhaustive(e, 6))
        });
        group.bench_with_input(BenchmarkId::new("split-n6", &label), &exec, |b, &e| b.iter(|| split_exhaustive(e, 6)));
        group.bench_with_input(BenchmarkId::new("packing-n5", &label), &exec, |b, &e| {
            b.iter(|| packing_exhaustive(e, 5))
        });
    }
    group.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
