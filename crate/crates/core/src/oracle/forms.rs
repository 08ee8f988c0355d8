//! Binary forms over a prime field and their homogeneous gcd.

use crate::error::{Error, Result};

pub(crate) fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let mut k = 2u32;
    while k.saturating_mul(k) <= q {
        if q.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

fn inverse(a: u32, p: u32) -> u32 {
    // Fermat; p is prime and a != 0
    let (mut base, mut exp, mut acc) = (u64::from(a), p - 2, 1u64);
    let m = u64::from(p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc as u32
}

/// Univariate polynomial over `F_p`, lowest degree first, no trailing zeros.
pub(crate) type FpPoly = Vec<u32>;

fn trim(p: &mut FpPoly) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

/// `a mod b` for nonzero `b`.
fn rem(mut a: FpPoly, b: &[u32], p: u32) -> FpPoly {
    let m = u64::from(p);
    let lead_inv = u64::from(inverse(*b.last().expect("nonzero divisor"), p));
    while a.len() >= b.len() {
        let shift = a.len() - b.len();
        let factor = u64::from(*a.last().unwrap()) * lead_inv % m;
        for (k, &bk) in b.iter().enumerate() {
            let sub = factor * u64::from(bk) % m;
            let slot = &mut a[shift + k];
            *slot = ((u64::from(*slot) + m - sub) % m) as u32;
        }
        trim(&mut a);
    }
    a
}

pub(crate) fn make_monic(mut a: FpPoly, p: u32) -> FpPoly {
    if let Some(&lead) = a.last() {
        let inv = u64::from(inverse(lead, p));
        for c in a.iter_mut() {
            *c = (u64::from(*c) * inv % u64::from(p)) as u32;
        }
    }
    a
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub(crate) fn poly_gcd(a: &[u32], b: &[u32], p: u32) -> FpPoly {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(a, &b, p);
        a = b;
        b = r;
    }
    make_monic(a, p)
}

/// `f(x, y) = sum_k coeffs[k] x^{d-k} y^k` with `d = coeffs.len() - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    q: u32,
    coeffs: Vec<u32>,
}

/// A nonzero form split as `y^e * F` where `F(x, 1)` has degree `d - e`;
/// the zero form has no such split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Dehomogenized {
    Zero,
    Split { y_power: u32, poly: FpPoly },
}

impl Dehomogenized {
    pub(crate) fn is_unit(&self) -> bool {
        matches!(self, Dehomogenized::Split { y_power: 0, poly } if poly.len() == 1)
    }
}

/// Homogeneous gcd of two dehomogenized forms.
pub(crate) fn gcd_dehom(a: &Dehomogenized, b: &Dehomogenized, p: u32) -> Dehomogenized {
    match (a, b) {
        (Dehomogenized::Zero, x) | (x, Dehomogenized::Zero) => match x {
            Dehomogenized::Zero => Dehomogenized::Zero,
            Dehomogenized::Split { y_power, poly } => Dehomogenized::Split {
                y_power: *y_power,
                poly: make_monic(poly.clone(), p),
            },
        },
        (
            Dehomogenized::Split { y_power: ea, poly: pa },
            Dehomogenized::Split { y_power: eb, poly: pb },
        ) => Dehomogenized::Split {
            y_power: (*ea).min(*eb),
            poly: poly_gcd(pa, pb, p),
        },
    }
}

impl BinaryForm {
    /// `q` must be prime; coefficients are reduced mod `q`.
    pub fn new(q: u32, coeffs: Vec<u32>) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::Unsupported(format!(
                "field order {q} is not prime; only prime fields are supported"
            )));
        }
        if coeffs.is_empty() {
            return Err(Error::Precondition("a binary form needs at least one coefficient".into()));
        }
        let coeffs = coeffs.into_iter().map(|c| c % q).collect();
        Ok(BinaryForm { q, coeffs })
    }

    pub fn zero(q: u32, degree: u32) -> Result<Self> {
        Self::new(q, vec![0; degree as usize + 1])
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn degree_bound(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }

    /// Coefficients of `x^d, x^{d-1} y, ..., y^d`.
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// `true` for nonzero constants.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] != 0
    }

    pub(crate) fn dehomogenize(&self) -> Dehomogenized {
        let d = self.coeffs.len() - 1;
        let mut poly: FpPoly = (0..=d).map(|j| self.coeffs[d - j]).collect();
        trim(&mut poly);
        if poly.is_empty() {
            return Dehomogenized::Zero;
        }
        Dehomogenized::Split {
            y_power: (d + 1 - poly.len()) as u32,
            poly,
        }
    }

    fn from_dehomogenized(q: u32, h: &Dehomogenized, zero_degree: u32) -> Self {
        match h {
            Dehomogenized::Zero => BinaryForm {
                q,
                coeffs: vec![0; zero_degree as usize + 1],
            },
            Dehomogenized::Split { y_power, poly } => {
                let total = *y_power as usize + poly.len() - 1;
                let mut coeffs = vec![0; total + 1];
                for (j, &c) in poly.iter().enumerate() {
                    coeffs[total - j] = c;
                }
                BinaryForm { q, coeffs }
            }
        }
    }

    /// Monic gcd as binary forms: the `y`-adic parts (roots at `[1:0]`)
    /// combine by `min`, the rest by Euclid on the dehomogenizations.
    /// `gcd(0, g) = g`, normalized so the first nonzero coefficient is 1.
    pub fn hom_gcd(&self, other: &BinaryForm) -> Result<BinaryForm> {
        if self.q != other.q {
            return Err(Error::Precondition(format!(
                "forms over different fields F_{} and F_{}",
                self.q, other.q
            )));
        }
        let h = gcd_dehom(&self.dehomogenize(), &other.dehomogenize(), self.q);
        let zero_degree = self.degree_bound().max(other.degree_bound());
        Ok(Self::from_dehomogenized(self.q, &h, zero_degree))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(q: u32, c: &[u32]) -> BinaryForm {
        BinaryForm::new(q, c.to_vec()).unwrap()
    }

    #[test]
    fn gcd_examples_over_f2() {
        // x y and x^2
        let g = form(2, &[0, 1, 0]).hom_gcd(&form(2, &[1, 0, 0])).unwrap();
        assert_eq!(g, form(2, &[1, 0]));
        // x + y and x
        let g = form(2, &[1, 1]).hom_gcd(&form(2, &[1, 0])).unwrap();
        assert!(g.is_unit());
        // x^2 + y^2 = (x + y)^2 and x + y
        let g = form(2, &[1, 0, 1]).hom_gcd(&form(2, &[1, 1])).unwrap();
        assert_eq!(g, form(2, &[1, 1]));
    }

    #[test]
    fn gcd_with_zero_form() {
        let g = BinaryForm::zero(3, 2).unwrap().hom_gcd(&form(3, &[0, 2, 2])).unwrap();
        // 2xy + 2y^2 normalized to xy + y^2
        assert_eq!(g, form(3, &[0, 1, 1]));
        let z = BinaryForm::zero(3, 1).unwrap();
        assert!(z.hom_gcd(&z).unwrap().is_zero());
    }

    #[test]
    fn roots_at_infinity() {
        // y^2 and x y share y
        let g = form(5, &[0, 0, 1]).hom_gcd(&form(5, &[0, 1, 0])).unwrap();
        assert_eq!(g, form(5, &[0, 1]));
        // y and x share nothing
        assert!(form(5, &[0, 1]).hom_gcd(&form(5, &[1, 0])).unwrap().is_unit());
    }

    #[test]
    fn field_checks() {
        assert!(BinaryForm::new(4, vec![1]).is_err());
        assert!(BinaryForm::new(1, vec![1]).is_err());
        assert_eq!(form(3, &[4, 5]).coeffs(), &[1, 2]);
        assert!(form(2, &[1, 0]).hom_gcd(&form(3, &[1, 0])).is_err());
    }

    #[test]
    fn polynomial_gcd_mod_p() {
        // (x+1)(x+2) and (x+1)(x+3) over F_7
        let a = vec![2, 3, 1];
        let b = vec![3, 4, 1];
        assert_eq!(poly_gcd(&a, &b, 7), vec![1, 1]);
        assert_eq!(poly_gcd(&[], &[], 7), Vec::<u32>::new());
    }
}
