use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use linspec::designs::steiner_triple_system;
use linspec::shadow::lconn_check;
use linspec::spectral::spectral_radius;
use linspec::SpectralOptions;
use linspec_bench::{random_sparse, sts_ladder};

fn designs(c: &mut Criterion) {
    let opts = SpectralOptions::default();
    let mut group = c.benchmark_group("spectral_radius/sts");
    for h in sts_ladder() {
        group.bench_with_input(BenchmarkId::from_parameter(h.n()), &h, |b, h| {
            b.iter(|| spectral_radius(black_box(h), &opts).unwrap())
        });
    }
    group.finish();
}

fn irregular(c: &mut Criterion) {
    let opts = SpectralOptions::default();
    let mut group = c.benchmark_group("spectral_radius/random");
    for n in [30, 60, 120] {
        let h = random_sparse(n, 3, 7);
        if !h.is_connected() {
            continue;
        }
        group.bench_with_input(BenchmarkId::from_parameter(n), &h, |b, h| {
            b.iter(|| spectral_radius(black_box(h), &opts).unwrap())
        });
    }
    group.finish();
}

fn shadow_transfer(c: &mut Criterion) {
    let opts = SpectralOptions::default();
    let h = steiner_triple_system(63).unwrap();
    c.bench_function("lconn_check/sts63", |b| b.iter(|| lconn_check(black_box(&h), &opts).unwrap()));
}

criterion_group!(benches, designs, irregular, shadow_transfer);
criterion_main!(benches);
