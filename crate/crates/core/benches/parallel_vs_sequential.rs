//! Compares the data-parallel and sequential evaluation strategies on the
//! two batch entry points: slice kernels across degrees and coherence
//! certificates across sampled maps. Build with `--features parallel` to
//! measure rayon; without it both modes run the sequential path.

use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use grcoh_core::algebra::{kronecker_quiver, path_algebra};
use grcoh_core::artheory::build_theta;
use grcoh_core::graded::{coherence_check, graded_kernel, random_graded_map, CoherenceOptions};
use grcoh_core::tower::tower;
use grcoh_core::{seeded_rng, ExecMode, FieldSpec};

const MODES: [(&str, ExecMode); 2] = [
    ("sequential", ExecMode::Sequential),
    ("parallel", ExecMode::Parallel),
];

fn kernel_bench(c: &mut Criterion) {
    let a = path_algebra(&kronecker_quiver(), FieldSpec::Rationals).unwrap();
    let theta = build_theta(&a, 1, 4).unwrap().theta;
    let t = Arc::new(tower(&a, &theta, 6, 1, false).unwrap());
    let mut rng = seeded_rng(5);
    let map = random_graded_map(&t, &mut rng, 4, 0, 3).unwrap();
    let mut group = c.benchmark_group("graded_kernel");
    for (name, mode) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| graded_kernel(&map, 6, mode).unwrap());
        });
    }
    group.finish();
}

fn coherence_bench(c: &mut Criterion) {
    let a = path_algebra(&kronecker_quiver(), FieldSpec::Rationals).unwrap();
    let theta = build_theta(&a, 1, 4).unwrap().theta;
    let mut group = c.benchmark_group("coherence_check");
    group.sample_size(10);
    for (name, mode) in MODES {
        let mut opts = CoherenceOptions::new(4, 1, 8, 17);
        opts.mode = mode;
        group.bench_with_input(BenchmarkId::from_parameter(name), &opts, |b, opts| {
            b.iter(|| coherence_check(&a, &theta, opts).unwrap());
        });
    }
    group.finish();
}

criterion_group!(benches, kernel_bench, coherence_bench);
criterion_main!(benches);
