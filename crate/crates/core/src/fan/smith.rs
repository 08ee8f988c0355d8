//! Smith normal form of small integer matrices.

use crate::error::{Error, Result};

fn checked_sub_mul(a: i128, q: i128, b: i128) -> Result<i128> {
    q.checked_mul(b)
        .and_then(|p| a.checked_sub(p))
        .ok_or(Error::Overflow("Smith normal form"))
}

/// Nonzero invariant factors `d_1 | d_2 | ...` of an integer matrix, all positive.
/// The number of factors is the rank.
pub fn invariant_factors(rows: &[Vec<i64>]) -> Result<Vec<i128>> {
    let m = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let mut factors = Vec::new();

    for t in 0..m.min(n) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }

        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if a[i][t] != 0 {
                    let q = a[i][t] / a[t][t];
                    for j in t..n {
                        a[i][j] = checked_sub_mul(a[i][j], q, a[t][j])?;
                    }
                    if a[i][t] != 0 {
                        a.swap(t, i);
                        dirty = true;
                    }
                }
            }
            for j in t + 1..n {
                if a[t][j] != 0 {
                    let q = a[t][j] / a[t][t];
                    for row in a.iter_mut().skip(t) {
                        row[j] = checked_sub_mul(row[j], q, row[t])?;
                    }
                    if a[t][j] != 0 {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // pivot must divide the whole trailing block
            let p = a[t][t];
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| a[i][j] % p != 0));
            match offender {
                Some(i) => {
                    for j in t..n {
                        a[t][j] = a[t][j]
                            .checked_add(a[i][j])
                            .ok_or(Error::Overflow("Smith normal form"))?;
                    }
                }
                None => break,
            }
        }
        factors.push(a[t][t].abs());
    }
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn det(m: &[Vec<i128>]) -> i128 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum()
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|s| s.count_ones() as usize == k)
            .map(|s| (0..n).filter(|&i| s >> i & 1 == 1).collect())
            .collect()
    }

    fn gcd(a: i128, b: i128) -> i128 {
        if b == 0 { a.abs() } else { gcd(b, a % b) }
    }

    /// Determinantal divisors: gcd of all k x k minors equals d_1 ... d_k.
    fn determinantal_divisors(rows: &[Vec<i64>]) -> Vec<i128> {
        let m = rows.len();
        let n = rows[0].len();
        let mut out = Vec::new();
        for k in 1..=m.min(n) {
            let mut g = 0;
            for rs in subsets(m, k) {
                for cs in subsets(n, k) {
                    let minor: Vec<Vec<i128>> = rs
                        .iter()
                        .map(|&i| cs.iter().map(|&j| i128::from(rows[i][j])).collect())
                        .collect();
                    g = gcd(g, det(&minor));
                }
            }
            if g == 0 {
                break;
            }
            out.push(g);
        }
        out
    }

    #[test]
    fn weighted_projective_plane_rays() {
        let rays = vec![vec![1, 0], vec![0, 1], vec![-1, -2]];
        assert_eq!(invariant_factors(&rays).unwrap(), vec![1, 1]);
    }

    #[test]
    fn torsion_example() {
        let rows = vec![vec![2, 0], vec![0, 4], vec![0, 0]];
        assert_eq!(invariant_factors(&rows).unwrap(), vec![2, 4]);
        let rows = vec![vec![2, 0], vec![0, 3]];
        assert_eq!(invariant_factors(&rows).unwrap(), vec![1, 6]);
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        assert!(invariant_factors(&[vec![0, 0], vec![0, 0]]).unwrap().is_empty());
    }

    proptest! {
        #[test]
        fn products_match_determinantal_divisors(
            rows in prop::collection::vec(prop::collection::vec(-6i64..=6, 3), 2..=4)
        ) {
            let factors = invariant_factors(&rows).unwrap();
            for w in factors.windows(2) {
                prop_assert_eq!(w[1] % w[0], 0);
            }
            let divisors = determinantal_divisors(&rows);
            prop_assert_eq!(factors.len(), divisors.len());
            let mut prod = 1;
            for (f, d) in factors.iter().zip(&divisors) {
                prod *= f;
                prop_assert_eq!(prod, *d);
            }
        }
    }
}
