//! Face counts of simplicial complexes given by their minimal non-faces.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::fan::InflatedComplex;

/// Largest number of non-faces accepted by the inclusion-exclusion count.
pub const MAX_NON_FACES: usize = 20;

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn to_i128(x: BigInt) -> Result<i128> {
    x.to_i128().ok_or(Error::Overflow("face count"))
}

/// `f_{-1}, f_0, ..., f_D` for the complex on `vertex_count` vertices whose
/// faces are the vertex sets containing none of `non_faces` in full.
///
/// Inclusion-exclusion over subsets `T` of the non-faces:
/// `f_{s-1} = sum_T (-1)^|T| C(V - |∪T|, s - |∪T|)`.
/// Errors if a face of dimension above `pure_dimension` exists.
pub fn f_vector_of(
    vertex_count: usize,
    non_faces: &[Vec<usize>],
    pure_dimension: usize,
) -> Result<Vec<i128>> {
    if non_faces.len() > MAX_NON_FACES {
        return Err(Error::Unsupported(format!(
            "{} non-faces would need 2^{} inclusion-exclusion terms; use the graded linear-algebra path instead",
            non_faces.len(),
            non_faces.len()
        )));
    }
    let words = vertex_count.div_ceil(64).max(1);
    let masks: Vec<Vec<u64>> = non_faces
        .iter()
        .map(|nf| {
            let mut m = vec![0u64; words];
            for &v in nf {
                assert!(v < vertex_count, "non-face vertex out of range");
                m[v / 64] |= 1 << (v % 64);
            }
            m
        })
        .collect();

    // signed count of subsets T by union size
    let mut by_union = vec![0i64; vertex_count + 1];
    fn walk(masks: &[Vec<u64>], start: usize, acc: &[u64], sign: i64, by_union: &mut [i64]) {
        let size: u32 = acc.iter().map(|w| w.count_ones()).sum();
        by_union[size as usize] += sign;
        for k in start..masks.len() {
            let next: Vec<u64> = acc.iter().zip(&masks[k]).map(|(a, b)| a | b).collect();
            walk(masks, k + 1, &next, -sign, by_union);
        }
    }
    walk(&masks, 0, &vec![0u64; words], 1, &mut by_union);

    let v = vertex_count as i64;
    let face_count = |s: i64| -> BigInt {
        by_union
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(u, &c)| BigInt::from(c) * binomial(v - u as i64, s - u as i64))
            .sum()
    };

    for s in (pure_dimension as i64 + 2)..=v {
        if !face_count(s).is_zero() {
            return Err(Error::Inconsistent(format!(
                "complex has faces with {s} vertices, above its stated dimension {pure_dimension}"
            )));
        }
    }
    (0..=pure_dimension as i64 + 1)
        .map(|s| to_i128(face_count(s)))
        .collect()
}

/// f-vector of an inflated complex, `f_{-1} .. f_D`.
pub fn f_vector(cx: &InflatedComplex) -> Result<Vec<i128>> {
    f_vector_of(cx.vertex_count(), &cx.inflated_non_faces, cx.pure_dimension)
}

/// h-vector from f-vector: `sum_i h_i t^{D+1-i} = sum_i f_{i-1} (t-1)^{D+1-i}`.
///
/// `f` is `f_{-1} .. f_D`; missing trailing entries count as zero.
/// A negative entry means the input was not a complete simplicial complex.
pub fn h_from_f(f: &[i128], pure_dimension: usize) -> Result<Vec<i128>> {
    let top = pure_dimension as i64 + 1;
    if f.len() as i64 > top + 1 {
        return Err(Error::Precondition(format!(
            "f-vector has {} entries, dimension {pure_dimension} allows {}",
            f.len(),
            top + 1
        )));
    }
    let mut h = Vec::with_capacity(top as usize + 1);
    for k in 0..=top {
        let mut acc = BigInt::zero();
        for i in 0..=k {
            let fi = f.get(i as usize).copied().unwrap_or(0);
            if fi == 0 {
                continue;
            }
            let term = binomial(top - i, k - i) * BigInt::from(fi);
            if (k - i) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let hk = to_i128(acc)?;
        if hk < 0 {
            return Err(Error::Inconsistent(format!(
                "h_{k} = {hk} is negative; the complex is not complete and simplicial"
            )));
        }
        h.push(hk);
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exhaustive face count over all vertex subsets.
    fn brute_f(vertex_count: usize, non_faces: &[Vec<usize>]) -> Vec<i128> {
        let masks: Vec<u32> = non_faces
            .iter()
            .map(|nf| nf.iter().fold(0, |m, &v| m | 1 << v))
            .collect();
        let mut f = vec![0i128; vertex_count + 1];
        for s in 0u32..(1 << vertex_count) {
            if masks.iter().all(|&m| s & m != m) {
                f[s.count_ones() as usize] += 1;
            }
        }
        while f.len() > 1 && *f.last().unwrap() == 0 {
            f.pop();
        }
        f
    }

    #[test]
    fn triangle_boundary() {
        let f = f_vector_of(3, &[vec![0, 1, 2]], 1).unwrap();
        assert_eq!(f, vec![1, 3, 3]);
        assert_eq!(h_from_f(&f, 1).unwrap(), vec![1, 1, 1]);
    }

    #[test]
    fn square_complex() {
        let nf = [vec![0, 1], vec![2, 3]];
        let f = f_vector_of(4, &nf, 1).unwrap();
        assert_eq!(f, vec![1, 4, 4]);
        assert_eq!(f, brute_f(4, &nf));
        assert_eq!(h_from_f(&f, 1).unwrap(), vec![1, 2, 1]);
    }

    #[test]
    fn tetrahedron_boundary() {
        let f = f_vector_of(4, &[vec![0, 1, 2, 3]], 2).unwrap();
        assert_eq!(f, vec![1, 4, 6, 4]);
        assert_eq!(h_from_f(&f, 2).unwrap(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn wrong_dimension_is_detected() {
        assert!(matches!(
            f_vector_of(4, &[vec![0, 1, 2, 3]], 1),
            Err(Error::Inconsistent(_))
        ));
    }

    #[test]
    fn negative_h_is_reported() {
        // two disjoint edges: not a sphere
        let f = [1, 4, 2];
        assert!(matches!(h_from_f(&f, 1), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn too_many_non_faces_refused() {
        let nf: Vec<Vec<usize>> = (0..21).map(|i| vec![2 * i, 2 * i + 1]).collect();
        assert!(matches!(f_vector_of(42, &nf, 20), Err(Error::Unsupported(_))));
    }

    #[test]
    fn inclusion_exclusion_matches_enumeration() {
        let cases: Vec<(usize, Vec<Vec<usize>>)> = vec![
            (5, vec![vec![0, 2], vec![1, 3, 4]]),
            (6, vec![vec![0, 1, 2], vec![2, 3], vec![3, 4, 5]]),
            (8, vec![vec![0, 1, 2, 3], vec![2, 3, 4, 5, 6], vec![6, 7]]),
            (7, vec![vec![0, 1, 2, 3, 4, 5, 6]]),
        ];
        for (v, nf) in cases {
            let brute = brute_f(v, &nf);
            let dim = brute.len() - 2;
            assert_eq!(f_vector_of(v, &nf, dim).unwrap(), brute, "{nf:?}");
        }
    }
}
