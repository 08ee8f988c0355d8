//! Complete simplicial fans and their combinatorics.
//!
//! A [`Fan`] is given by primitive integer ray generators and its maximal
//! cones (sets of ray indices). Everything downstream is driven by the
//! primitive collections: the minimal sets of rays that do not lie in a
//! common cone. They generate the Stanley-Reisner ideal, cut out the
//! exceptional locus of the Cox quotient, and index the basepoint loci of
//! morphism spaces.

mod analysis;
pub mod fixtures;
mod smith;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use analysis::{
    check_degree_vector, class_group, inflate, lattice_sum, primitive_collections, validate_fan,
};
pub use smith::invariant_factors;
pub(crate) use analysis::{fan_complex, require_admissible};

/// Integer vector in the lattice `N = Z^r`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticeVector(pub Vec<i64>);

impl LatticeVector {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_primitive(&self) -> bool {
        self.0
            .iter()
            .fold(0u64, |g, &x| num_integer::gcd(g, x.unsigned_abs()))
            == 1
    }
}

/// Rays and maximal cones. Cones are stored sorted, and the cone list is
/// sorted lexicographically, so equal fans compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    rank: usize,
    rays: Vec<LatticeVector>,
    max_cones: Vec<Vec<usize>>,
    name: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct FanFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    rank: usize,
    rays: Vec<Vec<i64>>,
    max_cones: Vec<Vec<usize>>,
}

impl Fan {
    /// Checks structural well-formedness: ray lengths, primitivity, index
    /// ranges, no repeated rays, no cone inside another, every ray used.
    pub fn new(
        rank: usize,
        rays: Vec<Vec<i64>>,
        max_cones: Vec<Vec<usize>>,
        name: Option<String>,
    ) -> Result<Self> {
        if rank == 0 {
            return Err(Error::invalid_fan("rank must be positive"));
        }
        if rays.is_empty() {
            return Err(Error::invalid_fan("fan has no rays"));
        }
        if rays.len() > 64 {
            return Err(Error::invalid_fan("at most 64 rays are supported"));
        }
        let rays: Vec<LatticeVector> = rays.into_iter().map(LatticeVector).collect();
        for (i, ray) in rays.iter().enumerate() {
            if ray.0.len() != rank {
                return Err(Error::invalid_ray(
                    i,
                    format!("ray {i} has {} coordinates, rank is {rank}", ray.0.len()),
                ));
            }
            if !ray.is_primitive() {
                return Err(Error::invalid_ray(
                    i,
                    format!("ray {i} = {:?} is not a primitive lattice vector", ray.0),
                ));
            }
            if let Some(j) = rays[..i].iter().position(|r| r == ray) {
                return Err(Error::invalid_ray(i, format!("ray {i} repeats ray {j}")));
            }
        }

        let mut cones = Vec::with_capacity(max_cones.len());
        for (c, cone) in max_cones.into_iter().enumerate() {
            if cone.is_empty() {
                return Err(Error::invalid_cone(c, format!("cone {c} is empty")));
            }
            let set: BTreeSet<usize> = cone.iter().copied().collect();
            if set.len() != cone.len() {
                return Err(Error::invalid_cone(c, format!("cone {c} repeats a ray index")));
            }
            if let Some(&bad) = set.iter().find(|&&i| i >= rays.len()) {
                return Err(Error::InvalidFan {
                    reason: format!("cone {c} uses ray index {bad}, fan has {} rays", rays.len()),
                    cone: Some(c),
                    ray: Some(bad),
                });
            }
            cones.push((c, set));
        }
        if cones.is_empty() {
            return Err(Error::invalid_fan("fan has no maximal cones"));
        }
        for (a, sa) in &cones {
            for (b, sb) in &cones {
                if a != b && sa.is_subset(sb) {
                    return Err(Error::invalid_cone(
                        *a,
                        format!("cone {a} is contained in cone {b}"),
                    ));
                }
            }
        }
        for i in 0..rays.len() {
            if !cones.iter().any(|(_, s)| s.contains(&i)) {
                return Err(Error::invalid_ray(i, format!("ray {i} lies in no cone")));
            }
        }

        let mut max_cones: Vec<Vec<usize>> =
            cones.into_iter().map(|(_, s)| s.into_iter().collect()).collect();
        max_cones.sort();
        Ok(Fan {
            rank,
            rays,
            max_cones,
            name,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: FanFile = serde_json::from_str(text).map_err(|e| Error::FanParse(e.to_string()))?;
        Fan::new(file.rank, file.rays, file.max_cones, file.name)
    }

    pub fn to_json(&self) -> String {
        let file = FanFile {
            name: self.name.clone(),
            rank: self.rank,
            rays: self.rays.iter().map(|r| r.0.clone()).collect(),
            max_cones: self.max_cones.clone(),
        };
        serde_json::to_string(&file).expect("fan serializes")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_rays(&self) -> usize {
        self.rays.len()
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub(crate) fn cone_masks(&self) -> Vec<u64> {
        self.max_cones
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &i| m | 1 << i))
            .collect()
    }

    /// `true` iff the rays indexed by `mask` lie in a common maximal cone.
    pub(crate) fn is_face_mask(cone_masks: &[u64], mask: u64) -> bool {
        cone_masks.iter().any(|&c| c & mask == mask)
    }

    /// Product fan in `N_1 ⊕ N_2`: rays of `self` first, then those of
    /// `other`, cones are all unions of one cone from each factor.
    pub fn product(&self, other: &Fan) -> Result<Fan> {
        let (r1, r2) = (self.rank, other.rank);
        let mut rays = Vec::with_capacity(self.num_rays() + other.num_rays());
        for ray in &self.rays {
            let mut v = ray.0.clone();
            v.resize(r1 + r2, 0);
            rays.push(v);
        }
        for ray in &other.rays {
            let mut v = vec![0; r1];
            v.extend_from_slice(&ray.0);
            rays.push(v);
        }
        let shift = self.num_rays();
        let mut cones = Vec::new();
        for a in &self.max_cones {
            for b in &other.max_cones {
                let mut c = a.clone();
                c.extend(b.iter().map(|&i| i + shift));
                cones.push(c);
            }
        }
        let name = match (&self.name, &other.name) {
            (Some(a), Some(b)) => Some(format!("{a} x {b}")),
            _ => None,
        };
        Fan::new(r1 + r2, rays, cones, name)
    }
}

/// Validation flags returned by [`validate_fan`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FanReport {
    pub simplicial: bool,
    pub complete: bool,
    pub smooth: bool,
}

/// Minimal non-faces `E_1, ..., E_t`, each sorted, listed lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimitiveCollectionSet {
    pub collections: Vec<Vec<usize>>,
}

impl PrimitiveCollectionSet {
    pub fn len(&self) -> usize {
        self.collections.len()
    }

    pub fn is_empty(&self) -> bool {
        self.collections.is_empty()
    }

    /// `ε_k = |E_k|`.
    pub fn cardinalities(&self) -> Vec<usize> {
        self.collections.iter().map(Vec::len).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[usize]> {
        self.collections.iter().map(Vec::as_slice)
    }
}

/// `Cl(Σ) ≅ Z^free_rank ⊕ ⊕_k Z/torsion_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassGroup {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl ClassGroup {
    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// `|G(Σ)(F_q)|` for `G(Σ) = Hom(Cl(Σ), G_m)`:
    /// `(q-1)^free_rank * prod_k gcd(torsion_k, q-1)`.
    pub fn dual_group_order(&self, q: u64) -> u128 {
        let base = u128::from(q - 1).pow(self.free_rank as u32);
        self.torsion
            .iter()
            .fold(base, |acc, &t| acc * u128::from(num_integer::gcd(t, q - 1)))
    }
}

/// Multidegree `(d_1, ..., d_n)` of the line bundles, one entry per ray.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeVector(pub Vec<u32>);

impl DegreeVector {
    pub fn degrees(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&d| u64::from(d)).sum()
    }

    pub fn min(&self) -> Option<u32> {
        self.0.iter().copied().min()
    }

    /// Parses `"2,2,2"`; whitespace around entries is ignored.
    pub fn parse(text: &str) -> std::result::Result<Self, String> {
        text.split(',')
            .map(|s| {
                s.trim()
                    .parse::<u32>()
                    .map_err(|e| format!("bad degree entry {s:?}: {e}"))
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(DegreeVector)
    }
}

impl From<Vec<u32>> for DegreeVector {
    fn from(v: Vec<u32>) -> Self {
        DegreeVector(v)
    }
}

/// Stanley-Reisner data of the inflated fan: ray `i` is replaced by
/// `group_sizes[i]` copies, and each primitive collection by the union of
/// the copies of its rays.
///
/// Vertices are numbered group by group: ray `i`'s copies come after all
/// copies of rays `0..i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InflatedComplex {
    pub group_sizes: Vec<usize>,
    pub inflated_non_faces: Vec<Vec<usize>>,
    pub pure_dimension: usize,
}

impl InflatedComplex {
    pub fn vertex_count(&self) -> usize {
        self.group_sizes.iter().sum()
    }

    /// `true` iff `vertices` contains no inflated non-face in full.
    pub fn is_face(&self, vertices: &[usize]) -> bool {
        let set: BTreeSet<usize> = vertices.iter().copied().collect();
        !self
            .inflated_non_faces
            .iter()
            .any(|nf| nf.iter().all(|v| set.contains(v)))
    }
}
