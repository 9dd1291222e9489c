use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use dosebench_core::bundled::bundled_scenario;
use dosebench_core::copula::{cholesky, draw_profile, CorrelationMatrix};
use dosebench_core::{run_benchmark, run_trial, trial_stream};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

fn trials(c: &mut Criterion) {
    let mut group = c.benchmark_group("run_trial");
    for name in ["wang_sc1_equal", "wang_sc4_unequal", "bekele_sc1"] {
        let scenario = bundled_scenario(name).unwrap();
        group.bench_function(name, |b| {
            let mut index = 0u64;
            b.iter(|| {
                index += 1;
                run_trial(black_box(&scenario), &mut trial_stream(scenario.seed, index)).unwrap()
            })
        });
    }
    group.finish();
}

fn benchmark_runs(c: &mut Criterion) {
    let mut group = c.benchmark_group("run_benchmark");
    group.sample_size(10);
    let replications = 2_000u64;
    group.throughput(Throughput::Elements(replications));
    for name in ["wang_sc2_equal", "bekele_sc3"] {
        let mut scenario = bundled_scenario(name).unwrap();
        scenario.replications = replications;
        group.bench_with_input(BenchmarkId::from_parameter(name), &scenario, |b, s| {
            b.iter(|| run_benchmark(black_box(s), 1).unwrap())
        });
    }
    group.finish();
}

fn profiles(c: &mut Criterion) {
    let factor = cholesky(&CorrelationMatrix::bivariate(0.25).unwrap()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    c.bench_function("draw_profile_bivariate", |b| {
        b.iter(|| draw_profile(black_box(&factor), &mut rng))
    });
}

criterion_group!(benches, trials, benchmark_runs, profiles);
criterion_main!(benches);
