use std::collections::BTreeMap;

use super::smith::invariant_factors;
use super::{ClassGroup, DegreeVector, Fan, FanReport, InflatedComplex, PrimitiveCollectionSet};
use crate::algebra::integer_rank;
use crate::error::{Error, Result};

fn cone_rows(fan: &Fan, cone: &[usize]) -> Vec<Vec<i64>> {
    cone.iter().map(|&i| fan.rays()[i].0.clone()).collect()
}

/// Simplicial, complete and smooth flags.
///
/// Completeness uses the wall test: every max cone has `r` rays and every
/// `(r-1)`-subset of a max cone lies in exactly two max cones. All complete
/// simplicial fans pass it; it is exact for the fixtures this crate uses but
/// does not check that the cones cover `R^r` without overlap.
pub fn validate_fan(fan: &Fan) -> FanReport {
    let r = fan.rank();
    let simplicial = fan
        .max_cones()
        .iter()
        .all(|c| integer_rank(&cone_rows(fan, c)) == c.len());

    let full = fan.max_cones().iter().all(|c| c.len() == r);
    let complete = simplicial && full && walls_pair_up(fan);

    // a cone is smooth when its generators extend to a lattice basis,
    // i.e. all invariant factors of the generator matrix are 1
    let smooth = simplicial
        && fan.max_cones().iter().all(|c| {
            invariant_factors(&cone_rows(fan, c))
                .map(|f| f.len() == c.len() && f.iter().all(|&x| x == 1))
                .unwrap_or(false)
        });

    FanReport {
        simplicial,
        complete,
        smooth,
    }
}

fn walls_pair_up(fan: &Fan) -> bool {
    let mut walls: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for cone in fan.max_cones() {
        for skip in 0..cone.len() {
            let wall: Vec<usize> = cone
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != skip)
                .map(|(_, &i)| i)
                .collect();
            *walls.entry(wall).or_insert(0) += 1;
        }
    }
    walls.values().all(|&count| count == 2)
}

fn require_complete(fan: &Fan, what: &str) -> Result<()> {
    let report = validate_fan(fan);
    if !report.complete {
        return Err(Error::Unsupported(format!(
            "{what} needs a complete simplicial fan (simplicial: {}, complete: {})",
            report.simplicial, report.complete
        )));
    }
    Ok(())
}

/// Minimal non-faces of the fan's simplicial complex.
///
/// Every proper subset of a minimal non-face is a face, so a minimal non-face
/// has at most `r + 1` elements; only those sizes are searched.
pub fn primitive_collections(fan: &Fan) -> Result<PrimitiveCollectionSet> {
    require_complete(fan, "primitive_collections")?;
    let n = fan.num_rays();
    let cones = fan.cone_masks();
    let mut collections = Vec::new();

    fn choose(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            choose(n, k, i + 1, cur, out);
            cur.pop();
        }
    }

    for size in 2..=(fan.rank() + 1).min(n) {
        let mut subsets = Vec::new();
        choose(n, size, 0, &mut Vec::new(), &mut subsets);
        for s in subsets {
            let mask = s.iter().fold(0u64, |m, &i| m | 1 << i);
            if Fan::is_face_mask(&cones, mask) {
                continue;
            }
            let minimal = s
                .iter()
                .all(|&i| Fan::is_face_mask(&cones, mask & !(1 << i)));
            if minimal {
                collections.push(s);
            }
        }
    }
    collections.sort();
    Ok(PrimitiveCollectionSet { collections })
}

/// `Cl(Σ) = Z^n / M`, from the Smith form of the `n x r` ray matrix.
pub fn class_group(fan: &Fan) -> Result<ClassGroup> {
    let rows: Vec<Vec<i64>> = fan.rays().iter().map(|r| r.0.clone()).collect();
    let factors = invariant_factors(&rows)?;
    if factors.len() < fan.rank() {
        return Err(Error::Unsupported(format!(
            "rays span a rank-{} sublattice of N = Z^{}; the fan cannot be complete",
            factors.len(),
            fan.rank()
        )));
    }
    let torsion = factors
        .into_iter()
        .filter(|&f| f > 1)
        .map(|f| u64::try_from(f).map_err(|_| Error::Overflow("class group torsion")))
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassGroup {
        free_rank: fan.num_rays() - fan.rank(),
        torsion,
    })
}

/// `sum_i d_i u_i` in `Z^r`.
pub fn lattice_sum(fan: &Fan, d: &DegreeVector) -> Result<Vec<i64>> {
    if d.len() != fan.num_rays() {
        return Err(Error::DegreeLength {
            expected: fan.num_rays(),
            found: d.len(),
        });
    }
    let mut sum = vec![0i64; fan.rank()];
    for (ray, &di) in fan.rays().iter().zip(d.degrees()) {
        for (s, &x) in sum.iter_mut().zip(ray.coords()) {
            *s = x
                .checked_mul(i64::from(di))
                .and_then(|p| s.checked_add(p))
                .ok_or(Error::Overflow("lattice sum"))?;
        }
    }
    Ok(sum)
}

/// `true` iff `sum_i d_i u_i = 0`.
pub fn check_degree_vector(fan: &Fan, d: &DegreeVector) -> Result<bool> {
    Ok(lattice_sum(fan, d)?.iter().all(|&x| x == 0))
}

pub(crate) fn require_admissible(fan: &Fan, d: &DegreeVector) -> Result<()> {
    let sum = lattice_sum(fan, d)?;
    if sum.iter().any(|&x| x != 0) {
        return Err(Error::Inadmissible { lattice_sum: sum });
    }
    Ok(())
}

/// Stanley-Reisner data of the inflated fan for degree `d` and genus `g`.
///
/// Ray `i` becomes `m_i` vertices, `m_i = d_i + 1` in genus 0 and
/// `d_i - g + 1` (the rank of the section space) in genus `g > 0`.
pub fn inflate(fan: &Fan, d: &DegreeVector, genus: u32) -> Result<InflatedComplex> {
    require_admissible(fan, d)?;
    if genus > 0 {
        if let Some((i, &di)) = d.degrees().iter().enumerate().find(|&(_, &x)| x < 2 * genus) {
            return Err(Error::Precondition(format!(
                "genus {genus} needs every d_i >= {}, but d_{i} = {di}",
                2 * genus
            )));
        }
    }
    let pcs = primitive_collections(fan)?;
    let group_sizes: Vec<usize> = d
        .degrees()
        .iter()
        .map(|&di| (di - genus + 1) as usize)
        .collect();
    Ok(inflate_with_sizes(fan, &pcs, group_sizes))
}

pub(crate) fn inflate_with_sizes(
    fan: &Fan,
    pcs: &PrimitiveCollectionSet,
    group_sizes: Vec<usize>,
) -> InflatedComplex {
    let mut offsets = Vec::with_capacity(group_sizes.len());
    let mut acc = 0;
    for &m in &group_sizes {
        offsets.push(acc);
        acc += m;
    }
    let inflated_non_faces = pcs
        .iter()
        .map(|e| {
            e.iter()
                .flat_map(|&i| offsets[i]..offsets[i] + group_sizes[i])
                .collect()
        })
        .collect();
    let corank = fan.num_rays() - fan.rank();
    InflatedComplex {
        pure_dimension: acc - corank - 1,
        group_sizes,
        inflated_non_faces,
    }
}

/// The fan's own complex: every group has one vertex.
pub(crate) fn fan_complex(fan: &Fan) -> Result<InflatedComplex> {
    let pcs = primitive_collections(fan)?;
    Ok(inflate_with_sizes(fan, &pcs, vec![1; fan.num_rays()]))
}
