use criterion::{black_box, criterion_group, criterion_main, Criterion};

use toric_morphisms::algebra::{graded_quotient_dims, Polynomial};
use toric_morphisms::{genus0_table, genus_g_stable_table, target_betti};
use toric_morphisms_bench::moduli_workloads;

fn genus0(c: &mut Criterion) {
    let mut group = c.benchmark_group("genus0_table");
    for (name, fan, d) in moduli_workloads() {
        group.bench_function(name, |b| b.iter(|| genus0_table(black_box(&fan), black_box(&d)).unwrap()));
    }
    group.finish();
}

fn stable(c: &mut Criterion) {
    let fan = toric_morphisms::fan::fixtures::p2();
    let d = vec![6, 6, 6].into();
    c.bench_function("genus_g_stable_table P2 d=6 g=1", |b| {
        b.iter(|| genus_g_stable_table(black_box(&fan), black_box(&d), 1).unwrap())
    });
}

fn target(c: &mut Criterion) {
    let fan = toric_morphisms::fan::fixtures::p2_blown_up_twice();
    c.bench_function("target_betti P2 blown up twice", |b| b.iter(|| target_betti(black_box(&fan)).unwrap()));
}

fn quotient(c: &mut Criterion) {
    // Q[x_0..x_4] / (x_0 x_1, x_2 x_3 x_4, x_0 + x_2 - x_4)
    let monomials = vec![vec![1, 1, 0, 0, 0], vec![0, 0, 1, 1, 1]];
    let linear = vec![Polynomial::linear(&[1, 0, 1, 0, -1])];
    c.bench_function("graded_quotient_dims 5 vars deg 8", |b| {
        b.iter(|| graded_quotient_dims(5, black_box(&monomials), black_box(&linear), 8).unwrap())
    });
}

criterion_group!(benches, genus0, stable, target, quotient);
criterion_main!(benches);
