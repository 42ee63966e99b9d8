use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;

use metaplectic::padic::frac;
use metaplectic::verify::{SampleConfig, TrialDraw};
use metaplectic::{cocycle, hilbert, witness, PadicContext};

fn contexts() -> Vec<PadicContext> {
    SampleConfig::default_contexts()
}

fn bench_hilbert(c: &mut Criterion) {
    let mut group = c.benchmark_group("hilbert");
    for ctx in contexts() {
        let (a, b) = (frac(-45, 49), frac(12, 25 * 13));
        group.bench_function(format!("p{}_n{}", ctx.p(), ctx.n()), |bench| {
            bench.iter(|| hilbert(black_box(&a), black_box(&b), &ctx).unwrap())
        });
    }
    group.finish();
}

fn bench_cocycle(c: &mut Criterion) {
    let cfg = SampleConfig::default();
    let mut group = c.benchmark_group("cocycle");
    for ctx in contexts() {
        let mut i = 0u64;
        group.bench_function(format!("p{}_n{}", ctx.p(), ctx.n()), |bench| {
            bench.iter_batched(
                || {
                    i += 1;
                    let mut d = TrialDraw::new(&cfg, &ctx, 100 + i % 512);
                    (d.gl2(), d.gl2())
                },
                |(g1, g2)| cocycle(&g1, &g2, &ctx),
                BatchSize::SmallInput,
            )
        });
    }
    group.finish();
}

fn bench_witness(c: &mut Criterion) {
    let cfg = SampleConfig::default();
    let mut group = c.benchmark_group("witness");
    for ctx in contexts() {
        let mut i = 0u64;
        group.bench_function(format!("p{}_n{}", ctx.p(), ctx.n()), |bench| {
            bench.iter_batched(
                || {
                    i += 1;
                    TrialDraw::new(&cfg, &ctx, 100 + i % 512).meta()
                },
                |h| witness(&h, &ctx).unwrap(),
                BatchSize::SmallInput,
            )
        });
    }
    group.finish();
}

criterion_group!(benches, bench_hilbert, bench_cocycle, bench_witness);
criterion_main!(benches);
