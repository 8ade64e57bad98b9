use criterion::{criterion_group, criterion_main, Criterion};
use cubeops_harness::{default_suite_names, run_suites, Mode, SuiteConfig};

fn bench_modes(c: &mut Criterion) {
    let cfg = SuiteConfig { samples: 24, ..SuiteConfig::default() };
    let names = default_suite_names();
    let mut group = c.benchmark_group("suite-run");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| run_suites(&cfg, &names, Mode::Sequential).unwrap());
    });
    group.bench_function("parallel", |b| {
        b.iter(|| run_suites(&cfg, &names, Mode::Parallel).unwrap());
    });
    group.finish();
}

criterion_group!(benches, bench_modes);
criterion_main!(benches);
