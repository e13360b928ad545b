use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use acimult::sweep::{sweep, SweepPlan};

fn plans() -> Vec<(&'static str, SweepPlan)> {
    vec![
        ("aci", SweepPlan::Aci { max_e3: 9, gen_counts: vec![5, 7], max_dn: 9 }),
        ("case-iv", SweepPlan::CaseIv { max_rsum: 12, gen_counts: vec![5, 7] }),
        ("linked-ci", SweepPlan::LinkedCi { n_values: vec![2, 3, 4], max_degree: 6 }),
    ]
}

const WORKERS: usize = 4;

fn bench_sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for (name, plan) in plans() {
        group.bench_with_input(BenchmarkId::new("sequential", name), &plan, |b, p| b.iter(|| sweep(p, 1).unwrap()));
        group.bench_with_input(BenchmarkId::new(format!("parallel-{WORKERS}"), name), &plan, |b, p| {
            b.iter(|| sweep(p, WORKERS).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_sweeps);
criterion_main!(benches);
