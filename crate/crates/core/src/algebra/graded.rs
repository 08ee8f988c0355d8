//! Dimensions of graded pieces of `Q[x_1..x_n] / I`.
//!
//! Each variable has degree one. The degree-`k` slice of `I` is spanned by
//! `monomial * generator` products; monomial generators are handled by
//! discarding the columns they kill, the remaining generators by exact row
//! reduction on the surviving (standard) monomials.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::matrix::RationalMatrix;
use super::tables::BettiPolynomial;
use crate::error::{Error, Result};

pub type Exponent = Vec<u32>;

/// Polynomial with rational coefficients, stored as exponent vector -> coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    num_vars: usize,
    terms: BTreeMap<Exponent, BigRational>,
}

impl Polynomial {
    pub fn zero(num_vars: usize) -> Self {
        Polynomial {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn add_term(&mut self, exponent: Exponent, coeff: BigRational) {
        assert_eq!(exponent.len(), self.num_vars, "exponent length mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exponent) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_int_term(&mut self, exponent: Exponent, coeff: i64) {
        self.add_term(exponent, BigRational::from_integer(BigInt::from(coeff)));
    }

    /// `sum_i coeffs[i] * x_i`.
    pub fn linear(coeffs: &[i64]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, &c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_int_term(e, c);
        }
        p
    }

    /// Product of the listed variables (repeats allowed).
    pub fn monomial(num_vars: usize, vars: &[usize]) -> Self {
        let mut p = Self::zero(num_vars);
        p.add_int_term(exponent_of(num_vars, vars), 1);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    /// Common degree of all terms, or `None` if the terms disagree.
    /// The zero polynomial reports `Some(0)`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degrees.next().unwrap_or(0);
        degrees.all(|d| d == first).then_some(first)
    }
}

pub(crate) fn exponent_of(num_vars: usize, vars: &[usize]) -> Exponent {
    let mut e = vec![0; num_vars];
    for &v in vars {
        e[v] += 1;
    }
    e
}

/// All exponent vectors of total degree `degree` in `num_vars` variables,
/// in lexicographically decreasing order.
pub fn monomials_of_degree(num_vars: usize, degree: u32) -> Vec<Exponent> {
    fn rec(prefix: &mut Exponent, left: usize, remaining: u32, out: &mut Vec<Exponent>) {
        if left == 1 {
            prefix.push(remaining);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=remaining).rev() {
            prefix.push(a);
            rec(prefix, left - 1, remaining - a, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if num_vars == 0 {
        if degree == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(&mut Vec::with_capacity(num_vars), num_vars, degree, &mut out);
    out
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Dimensions of the degree-`k` parts of `Q[x_1..x_n] / I` for `k <= max_degree`.
///
/// `I` is generated by the monomials in `monomial_relations` (exponent
/// vectors) together with `poly_relations`, which must each be homogeneous.
/// Stops early once a slice vanishes: then every monomial of that degree lies
/// in `I`, and so does every monomial above it.
pub fn graded_quotient_dims(
    num_vars: usize,
    monomial_relations: &[Exponent],
    poly_relations: &[Polynomial],
    max_degree: u32,
) -> Result<BettiPolynomial> {
    for m in monomial_relations {
        if m.len() != num_vars {
            return Err(Error::Precondition(format!(
                "monomial relation {m:?} has {} exponents, expected {num_vars}",
                m.len()
            )));
        }
    }
    let mut relations = Vec::new();
    for (index, p) in poly_relations.iter().enumerate() {
        if p.num_vars() != num_vars {
            return Err(Error::Precondition(format!(
                "relation {index} is over {} variables, expected {num_vars}",
                p.num_vars()
            )));
        }
        let degree = p
            .homogeneous_degree()
            .ok_or(Error::NonHomogeneous { index })?;
        if !p.is_zero() {
            relations.push((degree, p));
        }
    }

    let mut dims = BettiPolynomial::new();
    for k in 0..=max_degree {
        let standard: Vec<Exponent> = monomials_of_degree(num_vars, k)
            .into_iter()
            .filter(|e| !monomial_relations.iter().any(|m| divides(m, e)))
            .collect();
        if standard.is_empty() {
            break;
        }
        let column: HashMap<&Exponent, usize> =
            standard.iter().enumerate().map(|(i, e)| (e, i)).collect();

        let mut rows = Vec::new();
        for &(degree, p) in &relations {
            if degree > k {
                continue;
            }
            for shift in monomials_of_degree(num_vars, k - degree) {
                let mut row = vec![BigRational::zero(); standard.len()];
                let mut nonzero = false;
                for (e, c) in p.terms() {
                    let prod: Exponent = e.iter().zip(&shift).map(|(a, b)| a + b).collect();
                    if let Some(&j) = column.get(&prod) {
                        row[j] += c;
                        nonzero = true;
                    }
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
        let rank = if rows.is_empty() {
            0
        } else {
            RationalMatrix::from_rows(rows, standard.len()).rank()
        };
        let dim = (standard.len() - rank) as u64;
        if dim == 0 {
            break;
        }
        dims.add(k, dim);
    }
    Ok(dims)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn truncated_polynomial_ring() {
        let dims = graded_quotient_dims(1, &[vec![2]], &[], 5).unwrap();
        assert_eq!(dims.to_dense(), vec![1, 1]);
    }

    #[test]
    fn projective_plane_moduli_ring() {
        // D1 D2 D3, D1 - D2, D2 - D3, D1 D2 + D1 D3 + D2 D3
        let mut hat = Polynomial::zero(3);
        hat.add_int_term(vec![1, 1, 0], 1);
        hat.add_int_term(vec![1, 0, 1], 1);
        hat.add_int_term(vec![0, 1, 1], 1);
        let rels = [Polynomial::linear(&[1, -1, 0]), Polynomial::linear(&[0, 1, -1]), hat];
        let dims = graded_quotient_dims(3, &[vec![1, 1, 1]], &rels, 4).unwrap();
        assert_eq!(dims.to_dense(), vec![1, 1]);
    }

    #[test]
    fn projective_line_moduli_ring_is_trivial() {
        let rels = [Polynomial::linear(&[1, -1]), Polynomial::linear(&[1, 1])];
        let dims = graded_quotient_dims(2, &[vec![1, 1]], &rels, 3).unwrap();
        assert_eq!(dims.to_dense(), vec![1]);
    }

    #[test]
    fn free_polynomial_ring_dims_are_binomials() {
        for n in 1..5usize {
            let dims = graded_quotient_dims(n, &[], &[], 6).unwrap();
            for k in 0..=6u32 {
                assert_eq!(dims.get(k), binom(n as u64 + k as u64 - 1, k as u64));
            }
        }
    }

    #[test]
    fn non_homogeneous_relation_is_rejected() {
        let mut p = Polynomial::linear(&[1, 0]);
        p.add_int_term(vec![2, 0], 1);
        let err = graded_quotient_dims(2, &[], &[Polynomial::zero(2), p], 3).unwrap_err();
        assert_eq!(err, Error::NonHomogeneous { index: 1 });
    }

    #[test]
    fn monomial_enumeration_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(3, 0), vec![vec![0, 0, 0]]);
        assert_eq!(monomials_of_degree(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
    }
}
