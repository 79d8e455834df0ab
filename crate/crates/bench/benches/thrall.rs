use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use thrall_bench::{partition, trace_tableau, EXPANSION_INPUTS};
use thrall_core::domino::enumerate_ydt;
use thrall_core::symfunc::higher_lie_character;
use thrall_core::thrall::expansion_from_tableaux;
use thrall_core::vanleeuwen::xi_traced;

fn expansions(c: &mut Criterion) {
    let mut group = c.benchmark_group("expansion");
    for input in EXPANSION_INPUTS {
        let lambda = partition(input);
        group.bench_with_input(BenchmarkId::new("tableaux", input), &lambda, |b, l| {
            b.iter(|| expansion_from_tableaux(black_box(l)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("oracle", input), &lambda, |b, l| {
            b.iter(|| higher_lie_character(black_box(l)).unwrap())
        });
    }
    group.finish();
}

fn spin_trace(c: &mut Criterion) {
    let t = trace_tableau();
    c.bench_function("xi trace", |b| b.iter(|| xi_traced(black_box(&t)).unwrap()));
}

fn domino_tableaux(c: &mut Criterion) {
    let shape = partition("6,6,4,4");
    let weight = partition("5,3,2");
    c.bench_function("ydt 6,6,4,4 weight 5,3,2", |b| {
        b.iter(|| enumerate_ydt(black_box(&shape), black_box(&weight)).unwrap())
    });
}

criterion_group!(benches, expansions, spin_trace, domino_tableaux);
criterion_main!(benches);
