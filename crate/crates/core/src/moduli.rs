//! Cohomology tables of `Mor_d(C, X_Σ)` and point counts over `F_q`.
//!
//! Genus 0: `H^* = Q[D_1..D_n]/I ⊗ Λ[z_1..z_t]` where `I` adds to the target
//! relations one "hat" relation `sum_j D_{i_1}..D̂_{i_j}..D_{i_e}` per
//! primitive collection, and `z_j` has degree `2ε_j - 1` and weight `2ε_j`.
//! The classes `z_j = e - D_j` come from the basepoint resolution and carry
//! no further structure here.
//!
//! Genus `g > 0`: in total degree at most `n0 = min d_i - 2g` the second
//! page is a quotient of
//! `H^*(J(C))^{⊗(n-r)} ⊗ Q[D]/I ⊗ Λ[z_1..z_t] ⊗ Sym[α_i^j]`
//! with `α_i^j` (`i = 1..2g`, `α_i^j = γ_i - γ̄_i`) in degree `2ε_j - 2`,
//! weight `2ε_j - 1`. The tables built here are the dimensions of that free
//! algebra, so they are upper bounds; the column `p = 0` is exact.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{BettiPolynomial, IntPolynomial, WeightedBettiTable};
use crate::cohomology::{target_presentation, RingPresentation};
use crate::error::{Error, Result};
use crate::fan::{primitive_collections, require_admissible, DegreeVector, Fan};

/// A free generator of the moduli algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub name: String,
    /// Spectral-sequence column (`p` in `E_2^{-p, *}`).
    pub column: u32,
    pub degree: u32,
    pub weight: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuliTable {
    pub genus: u32,
    /// Bigraded dimensions, summed over columns.
    pub table: WeightedBettiTable,
    /// The same dimensions split by column `p`.
    pub columns: BTreeMap<u32, WeightedBettiTable>,
    /// Dimensions of `Q[D]/I` by polynomial degree.
    pub ring_dims: BettiPolynomial,
    /// The odd generators `z_j`.
    pub exterior_generators: Vec<Generator>,
    /// The even generators `α_i^j` (empty in genus 0).
    pub symmetric_generators: Vec<Generator>,
    /// `dim Mor_d(C, X)` as derived from the bundle construction.
    pub dimension: u64,
    /// `n0 = min d_i - 2g`; `None` for the genus-0 table.
    pub stable_bound: Option<i64>,
    /// Set when entries are only upper bounds (the stable genus-g tables).
    pub upper_bound_flag: bool,
}

impl ModuliTable {
    /// `{"dimension", "n0"?, "upper_bound", "entries": [[i, w, dim], ...]}`
    /// with keys in sorted order.
    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .table
            .entries()
            .map(|(i, w, d)| json!([i, w, d]))
            .collect();
        let mut obj = serde_json::Map::new();
        obj.insert("dimension".into(), json!(self.dimension));
        if let Some(n0) = self.stable_bound {
            obj.insert("n0".into(), json!(n0));
        }
        obj.insert("upper_bound".into(), json!(self.upper_bound_flag));
        obj.insert("entries".into(), Value::Array(entries));
        Value::Object(obj)
    }
}

/// `dim Mor_d(C, X_Σ)`. `derived = sum d_i + r(1 - g)` follows from the
/// bundle of sections over `J(C)^{n-r}`; `stated = sum d_i - n g + r` is the
/// exponent in the asymptotic point count. They agree in genus 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MorphismDimension {
    pub derived: u64,
    pub stated: i64,
}

pub fn moduli_dimension(fan: &Fan, d: &DegreeVector, genus: u32) -> Result<MorphismDimension> {
    require_admissible(fan, d)?;
    let total = d.total() as i64;
    let (n, r, g) = (fan.num_rays() as i64, fan.rank() as i64, i64::from(genus));
    let derived = total + r * (1 - g);
    Ok(MorphismDimension {
        derived: u64::try_from(derived).map_err(|_| {
            Error::Precondition(format!("degree vector gives negative dimension {derived}"))
        })?,
        stated: total - n * g + r,
    })
}

/// `Q[D_1..D_n]/I` with the primitive-collection monomials, the linear
/// relations, and one hat relation per primitive collection.
pub fn moduli_ring_presentation(fan: &Fan) -> Result<RingPresentation> {
    let mut p = target_presentation(fan)?;
    p.hat_relations = p.monomial_relations.clone();
    Ok(p)
}

fn moduli_ring_dims(fan: &Fan) -> Result<BettiPolynomial> {
    moduli_ring_presentation(fan)?.evaluate(fan.rank() as u32)
}

/// Dimensions indexed by `(column, degree, weight)`.
#[derive(Clone, Default)]
struct Trigraded(BTreeMap<(u32, u32, u32), u64>);

impl Trigraded {
    fn unit() -> Self {
        let mut t = Self::default();
        t.0.insert((0, 0, 0), 1);
        t
    }

    fn column_zero(table: &WeightedBettiTable) -> Self {
        Trigraded(table.entries().map(|(i, w, d)| ((0, i, w), d)).collect())
    }

    /// Product, dropping anything of degree above `max_degree`.
    fn convolve(&self, other: &Trigraded, max_degree: Option<u32>) -> Trigraded {
        let mut out = BTreeMap::new();
        for (&(p, i, w), &x) in &self.0 {
            for (&(q, j, v), &y) in &other.0 {
                if max_degree.is_some_and(|m| i + j > m) {
                    continue;
                }
                *out.entry((p + q, i + j, w + v)).or_insert(0) += x * y;
            }
        }
        Trigraded(out)
    }

    fn split(&self) -> (WeightedBettiTable, BTreeMap<u32, WeightedBettiTable>) {
        let mut total = WeightedBettiTable::new();
        let mut columns: BTreeMap<u32, WeightedBettiTable> = BTreeMap::new();
        for (&(p, i, w), &d) in &self.0 {
            total.add(i, w, d);
            columns.entry(p).or_default().add(i, w, d);
        }
        (total, columns)
    }
}

fn z_generators(fan: &Fan) -> Result<Vec<Generator>> {
    Ok(primitive_collections(fan)?
        .cardinalities()
        .into_iter()
        .enumerate()
        .map(|(j, e)| Generator {
            name: format!("z{}", j + 1),
            column: 1,
            degree: 2 * e as u32 - 1,
            weight: 2 * e as u32,
        })
        .collect())
}

/// Full bigraded cohomology of `Mor_d(P^1, X_Σ)`.
///
/// The table does not depend on `d` beyond admissibility. Its point-count
/// polynomial matches `F_q` censuses when every `d_i >= 1`.
pub fn genus0_table(fan: &Fan, d: &DegreeVector) -> Result<ModuliTable> {
    require_admissible(fan, d)?;
    let ring_dims = moduli_ring_dims(fan)?;
    let zs = z_generators(fan)?;
    let mut acc = Trigraded::column_zero(&WeightedBettiTable::from_even_diagonal(&ring_dims));
    for z in &zs {
        let mut ext = Trigraded::unit();
        ext.0.insert((z.column, z.degree, z.weight), 1);
        acc = acc.convolve(&ext, None);
    }
    let (table, columns) = acc.split();
    Ok(ModuliTable {
        genus: 0,
        table,
        columns,
        ring_dims,
        exterior_generators: zs,
        symmetric_generators: Vec::new(),
        dimension: moduli_dimension(fan, d, 0)?.derived,
        stable_bound: None,
        upper_bound_flag: false,
    })
}

/// Stable-range table of the free algebra for any genus, including 0.
///
/// With `genus = 0` there are no Jacobian classes and no `α`'s, which makes
/// this the genus-0 table cut off at total degree `n0 = min d_i`.
pub fn stable_algebra_table(fan: &Fan, d: &DegreeVector, genus: u32) -> Result<ModuliTable> {
    require_admissible(fan, d)?;
    if let Some((i, &di)) = d.degrees().iter().enumerate().find(|&(_, &x)| x < 2 * genus) {
        return Err(Error::Precondition(format!(
            "genus {genus} needs every d_i >= {}, but d_{i} = {di}",
            2 * genus
        )));
    }
    let n0 = i64::from(d.min().unwrap_or(0)) - 2 * i64::from(genus);
    let ring_dims = moduli_ring_dims(fan)?;
    let zs = z_generators(fan)?;
    let mut alphas = Vec::new();
    for (j, z) in zs.iter().enumerate() {
        for i in 1..=2 * genus {
            alphas.push(Generator {
                name: format!("a{i}^{}", j + 1),
                column: 1,
                degree: z.degree - 1,
                weight: z.weight - 1,
            });
        }
    }

    let mut acc = Trigraded::default();
    if n0 > 0 {
        let cap = n0 as u32;
        let corank = (fan.num_rays() - fan.rank()) as u32;
        let jacobian = WeightedBettiTable::odd_weight_one_exterior(2 * genus * corank);
        let ring = WeightedBettiTable::from_even_diagonal(&ring_dims);
        acc = Trigraded::column_zero(&jacobian)
            .convolve(&Trigraded::column_zero(&ring), Some(cap));
        for z in &zs {
            let mut ext = Trigraded::unit();
            ext.0.insert((z.column, z.degree, z.weight), 1);
            acc = acc.convolve(&ext, Some(cap));
        }
        for a in &alphas {
            // degree 2ε - 2 >= 2, so the truncated symmetric powers are finite
            let mut sym = Trigraded::unit();
            let mut k = 1;
            while k * a.degree <= cap {
                sym.0.insert((k * a.column, k * a.degree, k * a.weight), 1);
                k += 1;
            }
            acc = acc.convolve(&sym, Some(cap));
        }
        acc.0.retain(|&(p, _, _), _| i64::from(p) <= n0);
    }
    let (table, columns) = acc.split();
    Ok(ModuliTable {
        genus,
        table,
        columns,
        ring_dims,
        exterior_generators: zs,
        symmetric_generators: alphas,
        dimension: moduli_dimension(fan, d, genus)?.derived,
        stable_bound: Some(n0),
        upper_bound_flag: true,
    })
}

/// Stable-range second page for curves of genus `g >= 1`.
pub fn genus_g_stable_table(fan: &Fan, d: &DegreeVector, genus: u32) -> Result<ModuliTable> {
    if genus == 0 {
        return Err(Error::Precondition(
            "genus_g_stable_table needs genus >= 1; use genus0_table".into(),
        ));
    }
    stable_algebra_table(fan, d, genus)
}

/// `sum_{(i, w)} (-1)^i dim q^{N - w/2}` with `N` the moduli dimension.
pub fn point_count_polynomial(m: &ModuliTable) -> Result<IntPolynomial> {
    if m.upper_bound_flag || m.genus > 0 {
        return Err(Error::Unsupported(
            "point counts need the exact genus-0 table".into(),
        ));
    }
    let n = m.dimension as i64;
    let mut poly = IntPolynomial::zero();
    for (i, w, dim) in m.table.entries() {
        if w % 2 == 1 {
            return Err(Error::Unsupported(format!(
                "entry ({i}, {w}) has odd weight; the table is not pure Tate"
            )));
        }
        let exponent = n - i64::from(w / 2);
        if exponent < 0 {
            return Err(Error::Unsupported(format!(
                "entry ({i}, {w}) would contribute q^{exponent}; some d_i is too small"
            )));
        }
        let dim = i64::try_from(dim).map_err(|_| Error::Overflow("point count"))?;
        let sign = if i % 2 == 0 { 1 } else { -1 };
        poly.add_term(exponent as u32, sign * dim);
    }
    Ok(poly)
}
