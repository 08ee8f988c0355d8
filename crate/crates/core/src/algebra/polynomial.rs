use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Integer polynomial in one variable (printed as `q`).
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: BTreeMap<u32, i64>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(exponent: u32, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exponent, coeff);
        p
    }

    /// From dense coefficients, constant term first.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (k, &c) in coeffs.iter().enumerate() {
            p.add_term(k as u32, c);
        }
        p
    }

    pub fn add_term(&mut self, exponent: u32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.coeffs.entry(exponent).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.coeffs.remove(&exponent);
        }
    }

    pub fn coeff(&self, exponent: u32) -> i64 {
        self.coeffs.get(&exponent).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading_coefficient(&self) -> i64 {
        self.coeffs.values().next_back().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient() == 1
    }

    /// Nonzero terms `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                out.add_term(a + b, x * y);
            }
        }
        out
    }

    /// Evaluates at an integer with overflow checks.
    pub fn eval(&self, q: i128) -> Result<i128> {
        let mut acc: i128 = 0;
        for (e, c) in self.terms() {
            let power = q
                .checked_pow(e)
                .ok_or(Error::Overflow("polynomial evaluation"))?;
            let term = power
                .checked_mul(i128::from(c))
                .ok_or(Error::Overflow("polynomial evaluation"))?;
            acc = acc
                .checked_add(term)
                .ok_or(Error::Overflow("polynomial evaluation"))?;
        }
        Ok(acc)
    }
}

impl std::ops::Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl fmt::Display for IntPolynomial {
    /// Highest power first, e.g. `q^5 + q^4 - q^2 - q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms().rev().enumerate() {
            let mag = c.unsigned_abs();
            match (n, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}")?;
                    }
                    if e == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_eval() {
        let mut p = IntPolynomial::zero();
        p.add_term(5, 1);
        p.add_term(4, 1);
        p.add_term(2, -1);
        p.add_term(1, -1);
        assert_eq!(p.to_string(), "q^5 + q^4 - q^2 - q");
        assert_eq!(p.eval(2).unwrap(), 42);
        assert!(p.is_monic());
        assert_eq!(p.degree(), Some(5));
    }

    #[test]
    fn product_of_coprime_forms_counts() {
        // (q^3 - q)^2 = q^6 - 2q^4 + q^2
        let a = IntPolynomial::from_coeffs(&[0, -1, 0, 1]);
        let sq = a.mul(&a);
        assert_eq!(sq, IntPolynomial::from_coeffs(&[0, 0, 1, 0, -2, 0, 1]));
        assert_eq!(sq.eval(2).unwrap(), 36);
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = IntPolynomial::monomial(3, 2);
        let b = IntPolynomial::monomial(3, -2);
        assert!((&a + &b).is_zero());
        assert_eq!(IntPolynomial::from_coeffs(&[-3, 0, -2]).to_string(), "-2q^2 - 3");
    }

    #[test]
    fn eval_overflow_is_reported() {
        let p = IntPolynomial::monomial(200, 1);
        assert!(matches!(p.eval(3), Err(Error::Overflow(_))));
    }
}
