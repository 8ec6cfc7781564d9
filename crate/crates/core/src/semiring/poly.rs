//! Polynomials in one indeterminate with nonnegative integer coefficients.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// An element of `N[x]`, lowest degree first, without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigUint>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigUint>) -> Poly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_u64s(coeffs: &[u64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(BigUint::one())
    }

    pub fn constant(c: BigUint) -> Poly {
        Poly::new(vec![c])
    }

    /// `c·x^k`.
    pub fn monomial(c: BigUint, k: usize) -> Poly {
        let mut coeffs = vec![BigUint::zero(); k];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    pub fn x() -> Poly {
        Poly::monomial(BigUint::one(), 1)
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigUint::zero();
        let coeffs = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
            .collect();
        Poly::new(coeffs)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigUint::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }

    pub fn pow(&self, n: u32) -> Poly {
        (0..n).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    /// Quotient `self / g` in `Z[x]`, if `g` divides `self` there.
    pub fn div_integer(&self, g: &Poly) -> Option<Vec<BigInt>> {
        let gd = g.degree()?;
        let mut rem: Vec<BigInt> = self.coeffs.iter().map(|c| BigInt::from(c.clone())).collect();
        if rem.is_empty() {
            return Some(Vec::new());
        }
        if rem.len() <= gd {
            return None;
        }
        let lead = BigInt::from(g.coeffs[gd].clone());
        let gi: Vec<BigInt> = g.coeffs.iter().map(|c| BigInt::from(c.clone())).collect();
        let mut quot = vec![BigInt::zero(); rem.len() - gd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + gd];
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (j, c) in gi.iter().enumerate() {
                    rem[k + j] -= &q * c;
                }
            }
            quot[k] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(quot)
        } else {
            None
        }
    }

    /// Quotient `self / g` in `N[x]`, if it exists.
    pub fn div_exact(&self, g: &Poly) -> Option<Poly> {
        let q = self.div_integer(g)?;
        if q.iter().any(Signed::is_negative) {
            return None;
        }
        Some(Poly::new(q.into_iter().map(|c| c.to_biguint().expect("nonnegative")).collect()))
    }

    /// Splits an integer polynomial into positive and negative parts.
    pub fn split_signed(coeffs: &[BigInt]) -> (Poly, Poly) {
        let pos = coeffs
            .iter()
            .map(|c| if c.sign() == Sign::Plus { c.magnitude().clone() } else { BigUint::zero() })
            .collect();
        let neg = coeffs
            .iter()
            .map(|c| if c.sign() == Sign::Minus { c.magnitude().clone() } else { BigUint::zero() })
            .collect();
        (Poly::new(pos), Poly::new(neg))
    }
}

impl Ord for Poly {
    /// Graded order: degree first, then coefficients from the top down.
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{c}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{c}x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
