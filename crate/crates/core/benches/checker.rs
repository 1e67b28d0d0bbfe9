use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use syzygy::constructions::dispatch;
use syzygy::sweep::{run_sweep_with, SweepGrid};
use syzygy::{criterion::check_family_with, Exec};

fn bench_check(c: &mut Criterion) {
    let mut group = c.benchmark_group("check_family");
    for &(dim, d, n) in &[(3, 6, 60), (4, 5, 100), (3, 8, 120)] {
        let (_, fam) = dispatch(dim, d, n).unwrap();
        let id = format!("{dim}-{d}-{n}");
        for exec in [Exec::Sequential, Exec::Parallel] {
            group.bench_with_input(BenchmarkId::new(format!("{exec:?}"), &id), &fam, |b, f| {
                b.iter(|| check_family_with(f, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    let grid = SweepGrid::new(3, 5);
    for exec in [Exec::Sequential, Exec::Parallel] {
        group.bench_function(format!("{exec:?}"), |b| {
            b.iter(|| run_sweep_with(&grid, exec))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_check, bench_sweep);
criterion_main!(benches);
