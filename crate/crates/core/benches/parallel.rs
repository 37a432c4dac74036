//! Sequential vs data-parallel timings for the compute-bound entry points.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use semiring_core::construct;
use semiring_core::par::{map_vec, Parallelism};
use semiring_core::Parallelism::{Auto, Sequential};

fn bench_axiom_sweep(c: &mut Criterion) {
    let pool: Vec<_> = construct::battery().into_iter().map(|(_, s)| s).collect();
    let mut group = c.benchmark_group("axiom_sweep");
    for mode in [Sequential, Auto] {
        group.bench_with_input(BenchmarkId::from_parameter(mode_name(mode)), &mode, |b, &mode| {
            b.iter(|| {
                let reports = map_vec(mode, pool.clone(), |s| s.verify_axioms().ok);
                assert!(reports.iter().all(|&ok| ok));
            })
        });
    }
    group.finish();
}

fn bench_classification(c: &mut Criterion) {
    let pool: Vec<_> = construct::battery().into_iter().map(|(_, s)| s).collect();
    let mut group = c.benchmark_group("classification");
    for mode in [Sequential, Auto] {
        group.bench_with_input(BenchmarkId::from_parameter(mode_name(mode)), &mode, |b, &mode| {
            b.iter(|| {
                let sizes = map_vec(mode, pool.clone(), |s| semiring_core::classify(&s).units.len());
                assert!(!sizes.is_empty());
            })
        });
    }
    group.finish();
}

fn bench_census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census_order4");
    group.sample_size(10);
    for mode in [Sequential, Auto] {
        group.bench_with_input(BenchmarkId::from_parameter(mode_name(mode)), &mode, |b, &mode| {
            b.iter(|| {
                let classes =
                    semiring_core::enumerate_semirings(4, true, None, mode, false).unwrap();
                assert_eq!(classes.len(), 36);
            })
        });
    }
    group.finish();
}

fn bench_claim_suite(c: &mut Criterion) {
    use semiring_core::SuiteConfig;
    let mut group = c.benchmark_group("claim_suite_order3");
    group.sample_size(10);
    for mode in [Sequential, Auto] {
        group.bench_with_input(BenchmarkId::from_parameter(mode_name(mode)), &mode, |b, &mode| {
            b.iter(|| {
                let config = SuiteConfig { claim_ids: None, max_order: 3, parallelism: mode };
                let report = semiring_core::run_suite(&config).unwrap();
                assert_eq!(report.summary.counterexamples, 0);
            })
        });
    }
    group.finish();
}

fn mode_name(p: Parallelism) -> &'static str {
    match p {
        Sequential => "sequential",
        Auto => "parallel",
        Parallelism::Threads(_) => "threads",
    }
}

criterion_group!(benches, bench_axiom_sweep, bench_classification, bench_census, bench_claim_suite);
criterion_main!(benches);
