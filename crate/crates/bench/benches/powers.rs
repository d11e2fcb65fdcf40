use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use symdef_bench::fixtures;
use symdef_core::cover::{cover_ideal, symbolic_power};
use symdef_core::sdefect::{sdefect_brute, sdefect_cycle, Limits};

fn bench_symbolic_power(c: &mut Criterion) {
    let mut group = c.benchmark_group("symbolic_power");
    for g in fixtures() {
        group.bench_with_input(BenchmarkId::from_parameter(g.id()), &g, |b, g| {
            b.iter(|| symbolic_power(g, 4).unwrap())
        });
    }
    group.finish();
}

fn bench_ordinary_power(c: &mut Criterion) {
    let mut group = c.benchmark_group("ordinary_power");
    for g in fixtures() {
        let j = cover_ideal(&g);
        group.bench_with_input(BenchmarkId::from_parameter(g.id()), &j, |b, j| b.iter(|| j.power(4).unwrap()));
    }
    group.finish();
}

fn bench_sdefect(c: &mut Criterion) {
    let lim = Limits::default();
    let mut group = c.benchmark_group("sdefect");
    group.sample_size(10);
    for g in fixtures() {
        group.bench_with_input(BenchmarkId::new("brute", g.id()), &g, |b, g| {
            b.iter(|| sdefect_brute(g, 5, lim).unwrap())
        });
    }
    for n in [5, 7, 9] {
        group.bench_with_input(BenchmarkId::new("cycle_recursion", n), &n, |b, &n| {
            b.iter(|| sdefect_cycle(n, 6, lim).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_symbolic_power, bench_ordinary_power, bench_sdefect);
criterion_main!(benches);
