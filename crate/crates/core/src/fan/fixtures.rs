//! Standard fans used in tests, benchmarks and examples.

use super::Fan;

/// `P^n`: rays `e_1, ..., e_n, -(e_1 + ... + e_n)`, cones all `n`-subsets.
pub fn projective_space(n: usize) -> Fan {
    assert!(n >= 1);
    let mut rays: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    rays.push(vec![-1; n]);
    let cones = (0..=n)
        .map(|skip| (0..=n).filter(|&i| i != skip).collect())
        .collect();
    Fan::new(n, rays, cones, Some(format!("P{n}"))).expect("projective space fan")
}

pub fn p1() -> Fan {
    projective_space(1)
}

pub fn p2() -> Fan {
    projective_space(2)
}

pub fn p1xp1() -> Fan {
    Fan::new(
        2,
        vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]],
        vec![vec![0, 2], vec![2, 1], vec![1, 3], vec![3, 0]],
        Some("P1xP1".into()),
    )
    .expect("P1xP1 fan")
}

/// Hirzebruch surface `F_a`: rays `(1,0), (0,1), (-1,a), (0,-1)`.
pub fn hirzebruch(a: i64) -> Fan {
    Fan::new(
        2,
        vec![vec![1, 0], vec![0, 1], vec![-1, a], vec![0, -1]],
        vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
        Some(format!("F{a}")),
    )
    .expect("Hirzebruch fan")
}

pub fn f1() -> Fan {
    hirzebruch(1)
}

/// Weighted projective plane `P(1,1,2)`: simplicial, not smooth.
pub fn p112() -> Fan {
    Fan::new(
        2,
        vec![vec![1, 0], vec![0, 1], vec![-1, -2]],
        vec![vec![0, 1], vec![1, 2], vec![2, 0]],
        Some("P(1,1,2)".into()),
    )
    .expect("P(1,1,2) fan")
}

/// Blow-up of `P^2` at two torus-fixed points (five rays, overlapping
/// primitive collections).
pub fn p2_blown_up_twice() -> Fan {
    Fan::new(
        2,
        vec![vec![1, 0], vec![1, 1], vec![0, 1], vec![-1, 0], vec![-1, -1]],
        vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 0]],
        Some("Bl2P2".into()),
    )
    .expect("blown-up plane fan")
}

/// The five fixtures the acceptance suite runs on, by name.
pub fn standard() -> Vec<(&'static str, Fan)> {
    vec![
        ("P1", p1()),
        ("P2", p2()),
        ("P1xP1", p1xp1()),
        ("F1", f1()),
        ("P(1,1,2)", p112()),
    ]
}
