use criterion::{black_box, criterion_group, criterion_main, Criterion};

use toric_morphisms::{count_points, CensusOptions};
use toric_morphisms_bench::census_workloads;

fn census(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_points");
    group.sample_size(10);
    for (name, fan, d, q) in census_workloads() {
        for workers in [1, 4] {
            let options = CensusOptions { workers, ..CensusOptions::default() };
            group.bench_function(format!("{name} workers={workers}"), |b| {
                b.iter(|| count_points(black_box(&fan), black_box(&d), q, options).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, census);
criterion_main!(benches);
