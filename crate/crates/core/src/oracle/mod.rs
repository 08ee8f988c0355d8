//! Brute-force census of `Mor_d(P^1, X_Σ)(F_q)`.
//!
//! A morphism is a tuple `(s_1, ..., s_n)` of binary forms of degrees
//! `d_1, ..., d_n` such that, for every primitive collection, the forms of
//! that collection have no common zero on `P^1` over the algebraic closure.
//! Two tuples give the same morphism when they differ by the action of
//! `G(Σ) = Hom(Cl(Σ), G_m)`. For a smooth fan with torsion-free class group
//! the action is free and `G(Σ) = G_m^{n-r}` has trivial torsors over `F_q`,
//! so the number of morphisms is the number of tuples divided by `(q-1)^{n-r}`.
//! Divisibility is checked, not assumed.

mod forms;

use std::thread;

use serde_json::{json, Value};

pub use forms::BinaryForm;
use forms::{gcd_dehom, is_prime, Dehomogenized};

use crate::error::{Error, Result};
use crate::fan::{
    class_group, primitive_collections, require_admissible, validate_fan, DegreeVector, Fan,
    PrimitiveCollectionSet,
};

/// Default cap on the number of enumerated tuples, `q^{sum (d_i + 1)}`.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusOptions {
    pub budget: u128,
    /// Worker threads; the count does not depend on it.
    pub workers: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            budget: DEFAULT_BUDGET,
            workers: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusResult {
    pub q: u32,
    pub degrees: Vec<u32>,
    /// Number of basepoint-free tuples.
    pub raw_tuples: u128,
    /// `(q-1)^{n-r}`.
    pub torus_order: u128,
    /// `raw_tuples / torus_order`; withheld when the assumptions fail.
    pub quotient: Option<u128>,
    /// Fan smooth and complete with torsion-free class group.
    pub assumptions_ok: bool,
}

impl CensusResult {
    /// `{"count", "degrees", "q", "raw", "torus"}`; `count` is null when withheld.
    pub fn to_json(&self) -> Value {
        json!({
            "count": self.quotient.map(|c| c as u64),
            "degrees": self.degrees,
            "q": self.q,
            "raw": self.raw_tuples as u64,
            "torus": self.torus_order as u64,
        })
    }
}

/// Errors with [`Error::Unsupported`] unless the fan is complete and smooth
/// with torsion-free class group, the setting in which the census divides
/// by a free torus action.
pub fn require_census_assumptions(fan: &Fan) -> Result<()> {
    let report = validate_fan(fan);
    let mut unmet = Vec::new();
    if !report.complete {
        unmet.push("complete");
    }
    if !report.smooth {
        unmet.push("smooth");
    }
    if report.complete && !class_group(fan)?.is_torsion_free() {
        unmet.push("torsion-free class group");
    }
    if unmet.is_empty() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "census needs a fan that is {}",
            unmet.join(", ")
        )))
    }
}

/// `true` iff for every primitive collection the forms indexed by it have a
/// nonzero constant as homogeneous gcd.
pub fn is_basepoint_free(tuple: &[BinaryForm], pcs: &PrimitiveCollectionSet) -> Result<bool> {
    let Some(q) = tuple.first().map(BinaryForm::q) else {
        return Ok(pcs.is_empty());
    };
    if tuple.iter().any(|f| f.q() != q) {
        return Err(Error::Precondition("forms over different fields".into()));
    }
    if let Some(bad) = pcs.iter().flatten().find(|&&i| i >= tuple.len()) {
        return Err(Error::Precondition(format!(
            "collection mentions ray {bad}, tuple has {} forms",
            tuple.len()
        )));
    }
    let dehom: Vec<Dehomogenized> = tuple.iter().map(BinaryForm::dehomogenize).collect();
    let refs: Vec<&Dehomogenized> = dehom.iter().collect();
    Ok(collections_coprime(&refs, pcs, q))
}

fn collections_coprime(forms: &[&Dehomogenized], pcs: &PrimitiveCollectionSet, q: u32) -> bool {
    pcs.iter().all(|collection| {
        let mut acc = Dehomogenized::Zero;
        for &i in collection {
            acc = gcd_dehom(&acc, forms[i], q);
            if acc.is_unit() {
                return true;
            }
        }
        acc.is_unit()
    })
}

/// All forms of degree `d` over `F_q`; form index `k` has coefficient `j`
/// equal to base-`q` digit `j` of `k`.
fn all_forms(q: u32, d: u32) -> Vec<Dehomogenized> {
    let len = d as usize + 1;
    let count = (q as usize).pow(len as u32);
    (0..count)
        .map(|mut k| {
            let coeffs: Vec<u32> = (0..len)
                .map(|_| {
                    let c = (k % q as usize) as u32;
                    k /= q as usize;
                    c
                })
                .collect();
            BinaryForm::new(q, coeffs).expect("prime checked").dehomogenize()
        })
        .collect()
}

/// Counts basepoint-free tuples with linear index in `[start, end)`.
/// Ray 0 is the least significant digit.
fn count_range(
    tables: &[Vec<Dehomogenized>],
    pcs: &PrimitiveCollectionSet,
    q: u32,
    start: u128,
    end: u128,
) -> u128 {
    if start >= end {
        return 0;
    }
    let mut digits = Vec::with_capacity(tables.len());
    let mut rest = start;
    for t in tables {
        digits.push((rest % t.len() as u128) as usize);
        rest /= t.len() as u128;
    }
    let mut current: Vec<&Dehomogenized> =
        tables.iter().zip(&digits).map(|(t, &k)| &t[k]).collect();

    let mut found = 0;
    for _ in start..end {
        if collections_coprime(&current, pcs, q) {
            found += 1;
        }
        // odometer step
        for (i, t) in tables.iter().enumerate() {
            digits[i] += 1;
            if digits[i] < t.len() {
                current[i] = &t[digits[i]];
                break;
            }
            digits[i] = 0;
            current[i] = &t[0];
        }
    }
    found
}

/// Enumerates `prod_i F_q^{d_i + 1}` and counts morphisms.
pub fn count_points(
    fan: &Fan,
    d: &DegreeVector,
    q: u32,
    options: CensusOptions,
) -> Result<CensusResult> {
    if !is_prime(q) {
        return Err(Error::Unsupported(format!(
            "field order {q} is not prime; only prime fields are supported"
        )));
    }
    require_admissible(fan, d)?;
    let pcs = primitive_collections(fan)?;
    let report = validate_fan(fan);
    let cl = class_group(fan)?;
    let assumptions_ok = report.complete && report.smooth && cl.is_torsion_free();

    let slots: u32 = d.degrees().iter().map(|&x| x + 1).sum();
    let required = u128::from(q).checked_pow(slots).unwrap_or(u128::MAX);
    if required > options.budget {
        return Err(Error::BudgetExceeded {
            required,
            budget: options.budget,
        });
    }

    let tables: Vec<Vec<Dehomogenized>> = d.degrees().iter().map(|&di| all_forms(q, di)).collect();
    let workers = options.workers.max(1) as u128;
    let chunk = required.div_ceil(workers);
    let raw_tuples: u128 = if workers == 1 {
        count_range(&tables, &pcs, q, 0, required)
    } else {
        thread::scope(|s| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let (tables, pcs) = (&tables, &pcs);
                    let start = (w * chunk).min(required);
                    let end = ((w + 1) * chunk).min(required);
                    s.spawn(move || count_range(tables, pcs, q, start, end))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("census worker panicked"))
                .sum()
        })
    };

    let torus_order = u128::from(q - 1).pow((fan.num_rays() - fan.rank()) as u32);
    let quotient = if assumptions_ok {
        if !raw_tuples.is_multiple_of(torus_order) {
            return Err(Error::Inconsistent(format!(
                "{raw_tuples} basepoint-free tuples is not divisible by the torus order {torus_order}"
            )));
        }
        Some(raw_tuples / torus_order)
    } else {
        None
    };

    Ok(CensusResult {
        q,
        degrees: d.degrees().to_vec(),
        raw_tuples,
        torus_order,
        quotient,
        assumptions_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::fixtures::*;

    fn form(q: u32, c: &[u32]) -> BinaryForm {
        BinaryForm::new(q, c.to_vec()).unwrap()
    }

    fn census(fan: &Fan, d: &[u32], q: u32) -> CensusResult {
        count_points(fan, &d.to_vec().into(), q, CensusOptions::default()).unwrap()
    }

    #[test]
    fn basepoint_examples() {
        let pc = primitive_collections(&p1()).unwrap();
        let (x, y) = (form(2, &[1, 0]), form(2, &[0, 1]));
        assert!(is_basepoint_free(&[x.clone(), y.clone()], &pc).unwrap());
        assert!(!is_basepoint_free(&[x.clone(), x.clone()], &pc).unwrap());

        let pc = primitive_collections(&p1xp1()).unwrap();
        assert!(!is_basepoint_free(&[x.clone(), y.clone(), x.clone(), x.clone()], &pc).unwrap());
        assert!(is_basepoint_free(&[x.clone(), y.clone(), y, x], &pc).unwrap());
    }

    #[test]
    fn zero_section_is_degenerate() {
        let pc = primitive_collections(&p1()).unwrap();
        let z = BinaryForm::zero(3, 1).unwrap();
        assert!(!is_basepoint_free(&[z, form(3, &[1, 0])], &pc).unwrap());
        // a nonzero constant never vanishes
        let pc0 = primitive_collections(&p1()).unwrap();
        assert!(is_basepoint_free(&[form(3, &[2]), BinaryForm::zero(3, 0).unwrap()], &pc0).is_ok());
    }

    #[test]
    fn projective_line_counts() {
        let c = census(&p1(), &[1, 1], 2);
        assert_eq!((c.raw_tuples, c.torus_order, c.quotient), (6, 1, Some(6)));
        let c = census(&p1(), &[1, 1], 3);
        assert_eq!((c.raw_tuples, c.quotient), (48, Some(24)));
        assert_eq!(census(&p1(), &[2, 2], 2).quotient, Some(24));
        assert_eq!(census(&p1(), &[2, 2], 3).quotient, Some(216));
        assert_eq!(census(&p1(), &[1, 1], 5).quotient, Some(120));
    }

    #[test]
    fn surface_counts() {
        assert_eq!(census(&p2(), &[1, 1, 1], 2).quotient, Some(42));
        assert_eq!(census(&p2(), &[2, 2, 2], 2).quotient, Some(336));
        assert_eq!(census(&p1xp1(), &[1, 1, 2, 2], 2).quotient, Some(144));
        assert_eq!(census(&f1(), &[1, 1, 1, 2], 2).quotient, Some(72));
        // some d_i = 0: the census is still well defined
        assert_eq!(census(&f1(), &[1, 0, 1, 1], 2).quotient, Some(24));
    }

    #[test]
    fn worker_count_does_not_change_result() {
        let d: DegreeVector = vec![1, 1, 1, 1].into();
        let one = count_points(&p1xp1(), &d, 3, CensusOptions::default()).unwrap();
        for workers in [2, 3, 7] {
            let many = count_points(&p1xp1(), &d, 3, CensusOptions { workers, ..Default::default() })
                .unwrap();
            assert_eq!(one, many);
        }
    }

    #[test]
    fn refusals() {
        let d: DegreeVector = vec![1, 2, 1].into();
        let c = count_points(&p112(), &d, 2, CensusOptions::default()).unwrap();
        assert!(!c.assumptions_ok);
        assert_eq!(c.quotient, None);

        let err = count_points(&p1(), &vec![20, 20].into(), 2, CensusOptions::default());
        assert!(matches!(err, Err(Error::BudgetExceeded { required, .. }) if required == 1 << 42));

        assert!(matches!(
            count_points(&p1(), &vec![1, 1].into(), 4, CensusOptions::default()),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            count_points(&p1(), &vec![1, 2].into(), 2, CensusOptions::default()),
            Err(Error::Inadmissible { .. })
        ));
    }

    #[test]
    fn census_json() {
        let c = census(&p1(), &[1, 1], 3);
        assert_eq!(
            serde_json::to_string(&c.to_json()).unwrap(),
            r#"{"count":24,"degrees":[1,1],"q":3,"raw":48,"torus":2}"#
        );
    }
}
