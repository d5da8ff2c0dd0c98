use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use helly_plane::harness::{run_suite_with, Execution, SuiteConfig, SuiteKind};

fn parallel_vs_sequential(c: &mut Criterion) {
    let mut group = c.benchmark_group("suites");
    group.sample_size(10);
    for (kind, trials) in [
        (SuiteKind::Thm1, 200),
        (SuiteKind::LemmaMain, 200),
        (SuiteKind::Signs, 50),
    ] {
        let config = SuiteConfig::new(kind, trials, 7);
        for (label, exec) in [
            ("parallel", Execution::Parallel),
            ("sequential", Execution::Sequential),
        ] {
            group.bench_with_input(BenchmarkId::new(label, kind), &config, |b, cfg| {
                b.iter(|| run_suite_with(cfg, exec).expect("suite runs"))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, parallel_vs_sequential);
criterion_main!(benches);
