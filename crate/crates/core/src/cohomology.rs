//! Cohomology of the target toric variety and of the ambient spaces that
//! contain the morphism spaces.
//!
//! The target ring is `Q[D_1..D_n] / I` with `I` generated by the
//! primitive-collection monomials and the linear forms
//! `sum_i <e^j, u_i> D_i`, `j = 1..r`; each `D_i` sits in bidegree `(2, 2)`.
//! Its graded dimensions are the h-vector of the fan's complex, which gives
//! an independent second route used as a consistency check.
//!
//! The genus-0 ambient space is the toric variety of the inflated fan and is
//! evaluated only through the h-vector of the inflated complex. In genus
//! `g > 0` the ambient space is a toric bundle over `J(C)^{n-r}`; additively
//! its cohomology is the fibre table tensored with `H^*(J(C))^{⊗(n-r)}`
//! (an exterior algebra on `2g(n-r)` classes of bidegree `(1, 1)`). The
//! Chern classes of the bundle (for the Poincaré bundle these are
//! `c_i = (-1)^i θ^i / i!` with `θ` the theta divisor class) only change the
//! ring structure and are not evaluated.

use serde::Serialize;

use crate::algebra::{
    exponent_of, f_vector, graded_quotient_dims, h_from_f, BettiPolynomial, Exponent, Polynomial,
    WeightedBettiTable,
};
use crate::error::{Error, Result};
use crate::fan::{fan_complex, inflate, primitive_collections, DegreeVector, Fan};

/// Generators with bidegrees plus three kinds of relations.
///
/// `hat_relations[k]` lists the rays of a primitive collection
/// `{i_1..i_e}` and stands for `sum_j D_{i_1} .. D̂_{i_j} .. D_{i_e}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingPresentation {
    pub generator_names: Vec<String>,
    pub generator_bidegrees: Vec<(u32, u32)>,
    pub monomial_relations: Vec<Vec<usize>>,
    pub linear_relations: Vec<Vec<i64>>,
    pub hat_relations: Vec<Vec<usize>>,
}

impl RingPresentation {
    pub fn num_generators(&self) -> usize {
        self.generator_names.len()
    }

    /// Relations as input for [`graded_quotient_dims`].
    pub fn relations(&self) -> (Vec<Exponent>, Vec<Polynomial>) {
        let n = self.num_generators();
        let monomials = self
            .monomial_relations
            .iter()
            .map(|m| exponent_of(n, m))
            .collect();
        let mut polys: Vec<Polynomial> = self
            .linear_relations
            .iter()
            .map(|row| Polynomial::linear(row))
            .collect();
        for collection in &self.hat_relations {
            let mut p = Polynomial::zero(n);
            for skip in 0..collection.len() {
                let rest: Vec<usize> = collection
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, &i)| i)
                    .collect();
                p.add_int_term(exponent_of(n, &rest), 1);
            }
            polys.push(p);
        }
        (monomials, polys)
    }

    /// Graded dimensions in polynomial degree `0..=max_degree`.
    pub fn evaluate(&self, max_degree: u32) -> Result<BettiPolynomial> {
        let (monomials, polys) = self.relations();
        graded_quotient_dims(self.num_generators(), &monomials, &polys, max_degree)
    }
}

/// `H^*(X_Σ; Q)` as `Q[D_1..D_n] / I`.
pub fn target_presentation(fan: &Fan) -> Result<RingPresentation> {
    let pcs = primitive_collections(fan)?;
    let n = fan.num_rays();
    let linear_relations = (0..fan.rank())
        .map(|j| fan.rays().iter().map(|u| u.coords()[j]).collect())
        .collect();
    Ok(RingPresentation {
        generator_names: (1..=n).map(|i| format!("D{i}")).collect(),
        generator_bidegrees: vec![(2, 2); n],
        monomial_relations: pcs.collections,
        linear_relations,
        hat_relations: Vec::new(),
    })
}

/// Target Betti table from the ring presentation alone.
pub fn target_betti_via_presentation(fan: &Fan) -> Result<WeightedBettiTable> {
    let dims = target_presentation(fan)?.evaluate(fan.rank() as u32)?;
    Ok(WeightedBettiTable::from_even_diagonal(&dims))
}

fn h_vector_table(h: &[i128]) -> Result<WeightedBettiTable> {
    let mut dims = BettiPolynomial::new();
    for (k, &hk) in h.iter().enumerate() {
        let hk = u64::try_from(hk).map_err(|_| Error::Overflow("h-vector entry"))?;
        dims.add(k as u32, hk);
    }
    Ok(WeightedBettiTable::from_even_diagonal(&dims))
}

/// h-vector of the fan's own complex.
pub fn target_h_vector(fan: &Fan) -> Result<Vec<i128>> {
    let cx = fan_complex(fan)?;
    h_from_f(&f_vector(&cx)?, cx.pure_dimension)
}

/// Target Betti table from the h-vector of the fan's complex alone.
pub fn target_betti_via_h_vector(fan: &Fan) -> Result<WeightedBettiTable> {
    h_vector_table(&target_h_vector(fan)?)
}

/// Betti table of the target, entry `(2k, 2k)` for polynomial degree `k`.
/// The presentation and h-vector routes must agree.
pub fn target_betti(fan: &Fan) -> Result<WeightedBettiTable> {
    let presented = target_betti_via_presentation(fan)?;
    let counted = target_betti_via_h_vector(fan)?;
    if presented != counted {
        return Err(Error::Inconsistent(format!(
            "target ring dimensions {:?} disagree with h-vector {:?}",
            presented.marginal().to_dense(),
            counted.marginal().to_dense()
        )));
    }
    Ok(presented)
}

/// Generators `D_{i,j}` of the inflated fan with its monomial relations.
///
/// The linear relations are left empty: their index range is not well
/// defined when the group sizes differ, and dimensions come from
/// [`ambient_betti`] instead.
pub fn ambient_presentation(fan: &Fan, d: &DegreeVector, genus: u32) -> Result<RingPresentation> {
    let cx = inflate(fan, d, genus)?;
    let mut names = Vec::with_capacity(cx.vertex_count());
    for (i, &m) in cx.group_sizes.iter().enumerate() {
        for j in 0..m {
            names.push(format!("D{},{}", i + 1, j));
        }
    }
    let v = names.len();
    Ok(RingPresentation {
        generator_names: names,
        generator_bidegrees: vec![(2, 2); v],
        monomial_relations: cx.inflated_non_faces,
        linear_relations: Vec::new(),
        hat_relations: Vec::new(),
    })
}

/// Betti table of the ambient space for degree `d` in genus `genus`.
pub fn ambient_betti(fan: &Fan, d: &DegreeVector, genus: u32) -> Result<WeightedBettiTable> {
    let cx = inflate(fan, d, genus)?;
    let fibre = h_vector_table(&h_from_f(&f_vector(&cx)?, cx.pure_dimension)?)?;
    if genus == 0 {
        return Ok(fibre);
    }
    let corank = (fan.num_rays() - fan.rank()) as u32;
    let base = WeightedBettiTable::odd_weight_one_exterior(2 * genus * corank);
    Ok(fibre.convolve(&base))
}

/// Complex dimension of the ambient space: `g(n-r) + sum_i m_i - (n-r)`.
pub fn ambient_dimension(fan: &Fan, d: &DegreeVector, genus: u32) -> Result<u64> {
    let cx = inflate(fan, d, genus)?;
    let corank = (fan.num_rays() - fan.rank()) as u64;
    Ok(u64::from(genus) * corank + cx.vertex_count() as u64 - corank)
}
