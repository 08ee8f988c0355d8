//! Graded and bigraded dimension tables.
//!
//! A [`WeightedBettiTable`] records `dim H^i` split by weight `w`. For the
//! pure Tate classes met here a class of Hodge type `(p, p)` has weight `2p`,
//! so `D` generators sit at `(2, 2)` and Tate twists are plain weight shifts.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Dimensions indexed by a single degree. Missing keys are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiPolynomial {
    coeffs: BTreeMap<u32, u64>,
}

impl BettiPolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_dims(dims: &[u64]) -> Self {
        let mut p = Self::new();
        for (k, &d) in dims.iter().enumerate() {
            p.add(k as u32, d);
        }
        p
    }

    pub fn add(&mut self, degree: u32, dim: u64) {
        if dim == 0 {
            return;
        }
        *self.coeffs.entry(degree).or_insert(0) += dim;
    }

    pub fn get(&self, degree: u32) -> u64 {
        self.coeffs.get(&degree).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.coeffs.values().sum()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.coeffs.iter().map(|(&k, &v)| (k, v))
    }

    /// Dense coefficient list `[b_0, b_1, ..., b_max]`.
    pub fn to_dense(&self) -> Vec<u64> {
        match self.max_degree() {
            None => Vec::new(),
            Some(top) => (0..=top).map(|k| self.get(k)).collect(),
        }
    }

    pub fn mul(&self, other: &BettiPolynomial) -> BettiPolynomial {
        let mut out = BettiPolynomial::new();
        for (a, x) in self.iter() {
            for (b, y) in other.iter() {
                out.add(a + b, x * y);
            }
        }
        out
    }
}

/// Dimensions indexed by `(cohomological degree, weight)`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct WeightedBettiTable {
    entries: BTreeMap<(u32, u32), u64>,
}

impl WeightedBettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// The table with a single class in bidegree `(0, 0)`.
    pub fn unit() -> Self {
        let mut t = Self::new();
        t.add(0, 0, 1);
        t
    }

    /// Places polynomial degree `k` at bidegree `(2k, 2k)`.
    pub fn from_even_diagonal(p: &BettiPolynomial) -> Self {
        let mut t = Self::new();
        for (k, d) in p.iter() {
            t.add(2 * k, 2 * k, d);
        }
        t
    }

    pub fn from_entries<I: IntoIterator<Item = (u32, u32, u64)>>(it: I) -> Self {
        let mut t = Self::new();
        for (i, w, d) in it {
            t.add(i, w, d);
        }
        t
    }

    pub fn add(&mut self, degree: u32, weight: u32, dim: u64) {
        if dim == 0 {
            return;
        }
        *self.entries.entry((degree, weight)).or_insert(0) += dim;
    }

    pub fn get(&self, degree: u32, weight: u32) -> u64 {
        self.entries.get(&(degree, weight)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries `(i, w, dim)` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, w), &d)| (i, w, d))
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Sums over weights, leaving ordinary Betti numbers by degree.
    pub fn marginal(&self) -> BettiPolynomial {
        let mut p = BettiPolynomial::new();
        for (i, _, d) in self.entries() {
            p.add(i, d);
        }
        p
    }

    /// Tensor product of bigraded vector spaces.
    pub fn convolve(&self, other: &WeightedBettiTable) -> WeightedBettiTable {
        let mut out = WeightedBettiTable::new();
        for (i, w, x) in self.entries() {
            for (j, v, y) in other.entries() {
                out.add(i + j, w + v, x * y);
            }
        }
        out
    }

    /// Keeps only entries of cohomological degree at most `max_degree`.
    pub fn truncated(&self, max_degree: u32) -> WeightedBettiTable {
        WeightedBettiTable {
            entries: self
                .entries
                .iter()
                .filter(|(&(i, _), _)| i <= max_degree)
                .map(|(&k, &v)| (k, v))
                .collect(),
        }
    }

    /// Exterior algebra on one generator of bidegree `(degree, weight)`.
    pub fn exterior_generator(degree: u32, weight: u32) -> Self {
        let mut t = Self::unit();
        t.add(degree, weight, 1);
        t
    }

    /// Exterior algebra on `count` generators all of bidegree `(1, 1)`:
    /// `dim = C(count, k)` at `(k, k)`. This is `H^*(J(C))^{⊗ m}` when
    /// `count = 2 g m`.
    pub fn odd_weight_one_exterior(count: u32) -> Self {
        let mut t = Self::new();
        let mut binom: u64 = 1;
        for k in 0..=count {
            t.add(k, k, binom);
            binom = binom * u64::from(count - k) / u64::from(k + 1);
        }
        t
    }
}

impl fmt::Debug for WeightedBettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.entries.iter())
            .finish()
    }
}

impl fmt::Display for WeightedBettiTable {
    /// Rows are cohomological degrees, one `weight:dim` pair per entry.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return writeln!(f, "(empty)");
        }
        let mut current = None;
        for (i, w, d) in self.entries() {
            if current != Some(i) {
                if current.is_some() {
                    writeln!(f)?;
                }
                write!(f, "H^{i:<3}")?;
                current = Some(i);
            }
            write!(f, "  w{w}: {d}")?;
        }
        writeln!(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn convolution_of_diagonals_multiplies_poincare_series() {
        let p1 = WeightedBettiTable::from_even_diagonal(&BettiPolynomial::from_dims(&[1, 1]));
        let sq = p1.convolve(&p1);
        assert_eq!(sq.get(0, 0), 1);
        assert_eq!(sq.get(2, 2), 2);
        assert_eq!(sq.get(4, 4), 1);
        assert_eq!(sq.total(), 4);
    }

    #[test]
    fn jacobian_exterior_algebra() {
        let j = WeightedBettiTable::odd_weight_one_exterior(2);
        assert_eq!(
            j.entries().collect::<Vec<_>>(),
            vec![(0, 0, 1), (1, 1, 2), (2, 2, 1)]
        );
        assert_eq!(WeightedBettiTable::odd_weight_one_exterior(6).total(), 64);
        assert_eq!(WeightedBettiTable::odd_weight_one_exterior(0), WeightedBettiTable::unit());
    }

    #[test]
    fn marginal_and_truncation() {
        let t = WeightedBettiTable::from_entries([(0, 0, 1), (3, 4, 2), (3, 3, 1), (6, 8, 1)]);
        assert_eq!(t.marginal().to_dense(), vec![1, 0, 0, 3, 0, 0, 1]);
        assert_eq!(t.truncated(3).total(), 4);
    }
}
