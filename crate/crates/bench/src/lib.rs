//! Workloads shared by the benchmarks in `benches/`.

use toric_morphisms::fan::fixtures;
use toric_morphisms::{DegreeVector, Fan};

/// Genus-0 table workloads: fan name, fan, degree vector.
pub fn moduli_workloads() -> Vec<(&'static str, Fan, DegreeVector)> {
    vec![
        ("P2 d=3", fixtures::p2(), vec![3, 3, 3].into()),
        ("P3 d=2", fixtures::projective_space(3), vec![2, 2, 2, 2].into()),
        ("P1xP1 d=(2,2,3,3)", fixtures::p1xp1(), vec![2, 2, 3, 3].into()),
        ("F1 d=(3,2,3,5)", fixtures::f1(), vec![3, 2, 3, 5].into()),
    ]
}

/// Census workloads: fan name, fan, degree vector, field order.
pub fn census_workloads() -> Vec<(&'static str, Fan, DegreeVector, u32)> {
    vec![
        ("P1 d=2 q=3", fixtures::p1(), vec![2, 2].into(), 3),
        ("P2 d=1 q=3", fixtures::p2(), vec![1, 1, 1].into(), 3),
        ("P1xP1 d=1 q=3", fixtures::p1xp1(), vec![1, 1, 1, 1].into(), 3),
    ]
}
