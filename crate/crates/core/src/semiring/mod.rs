//! Commutative semirings with unity: finite table instances and the three
//! built-in infinite carriers.

pub mod finite;
pub mod poly;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

pub use finite::{ElemSet, FiniteSemiring, StructureFlags};
pub use poly::Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SemiringKind {
    #[serde(rename = "table")]
    FiniteTable,
    #[serde(rename = "nat_plus")]
    NatPlusTimes,
    #[serde(rename = "nat_gcd")]
    NatGcdTimes,
    #[serde(rename = "nat_poly")]
    NatPoly,
}

impl fmt::Display for SemiringKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SemiringKind::FiniteTable => "table",
            SemiringKind::NatPlusTimes => "nat_plus",
            SemiringKind::NatGcdTimes => "nat_gcd",
            SemiringKind::NatPoly => "nat_poly",
        })
    }
}

/// A semiring element. Which variant is valid depends on the ambient kind.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Finite(usize),
    Nat(BigUint),
    Poly(Poly),
}

impl Element {
    pub fn nat(n: u64) -> Element {
        Element::Nat(BigUint::from(n))
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Element::Finite(_) => "finite",
            Element::Nat(_) => "nat",
            Element::Poly(_) => "poly",
        }
    }

    pub fn as_finite(&self) -> Option<usize> {
        match self {
            Element::Finite(i) => Some(*i),
            _ => None,
        }
    }

    pub fn as_nat(&self) -> Option<&BigUint> {
        match self {
            Element::Nat(n) => Some(n),
            _ => None,
        }
    }

    /// The value as a `u64`, if it is a natural number that fits.
    pub fn as_u64(&self) -> Option<u64> {
        self.as_nat().and_then(ToPrimitive::to_u64)
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        match self {
            Element::Poly(p) => Some(p),
            _ => None,
        }
    }
}

impl From<u64> for Element {
    fn from(n: u64) -> Self {
        Element::nat(n)
    }
}

impl From<Poly> for Element {
    fn from(p: Poly) -> Self {
        Element::Poly(p)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Finite(i) => write!(f, "{i}"),
            Element::Nat(n) => write!(f, "{n}"),
            Element::Poly(p) => write!(f, "{p}"),
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Element {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Element::Finite(i) => s.serialize_u64(*i as u64),
            Element::Nat(n) => match n.to_u64() {
                Some(v) => s.serialize_u64(v),
                None => s.serialize_str(&n.to_string()),
            },
            Element::Poly(p) => s.serialize_str(&p.to_string()),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub enum Semiring {
    Finite(Arc<FiniteSemiring>),
    /// `(N0, +, ·)`.
    NatPlusTimes,
    /// `(N0, gcd, ·)` with `gcd(0, a) = a`.
    NatGcdTimes,
    /// `N[x]` with the usual operations.
    NatPoly,
}

impl fmt::Debug for Semiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Semiring::Finite(r) => write!(f, "{r:?}"),
            other => write!(f, "{}", other.kind()),
        }
    }
}

impl From<FiniteSemiring> for Semiring {
    fn from(r: FiniteSemiring) -> Self {
        Semiring::Finite(Arc::new(r))
    }
}

/// Validates the tables and wraps them as a semiring.
pub fn make_finite_semiring(
    add_table: Vec<Vec<usize>>,
    mul_table: Vec<Vec<usize>>,
    zero: usize,
    one: usize,
) -> Result<Semiring> {
    FiniteSemiring::new(add_table, mul_table, zero, one).map(Semiring::from)
}

impl Semiring {
    pub fn kind(&self) -> SemiringKind {
        match self {
            Semiring::Finite(_) => SemiringKind::FiniteTable,
            Semiring::NatPlusTimes => SemiringKind::NatPlusTimes,
            Semiring::NatGcdTimes => SemiringKind::NatGcdTimes,
            Semiring::NatPoly => SemiringKind::NatPoly,
        }
    }

    pub fn as_finite(&self) -> Option<&FiniteSemiring> {
        match self {
            Semiring::Finite(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_nat(&self) -> bool {
        matches!(self, Semiring::NatPlusTimes | Semiring::NatGcdTimes)
    }

    pub fn zero(&self) -> Element {
        match self {
            Semiring::Finite(r) => Element::Finite(r.zero()),
            Semiring::NatPlusTimes | Semiring::NatGcdTimes => Element::Nat(BigUint::zero()),
            Semiring::NatPoly => Element::Poly(Poly::zero()),
        }
    }

    pub fn one(&self) -> Element {
        match self {
            Semiring::Finite(r) => Element::Finite(r.one()),
            Semiring::NatPlusTimes | Semiring::NatGcdTimes => Element::Nat(BigUint::one()),
            Semiring::NatPoly => Element::Poly(Poly::one()),
        }
    }

    /// Checks that `e` belongs to this carrier.
    pub fn check(&self, e: &Element) -> Result<()> {
        let ok = match (self, e) {
            (Semiring::Finite(r), Element::Finite(i)) => *i < r.order(),
            (Semiring::NatPlusTimes | Semiring::NatGcdTimes, Element::Nat(_)) => true,
            (Semiring::NatPoly, Element::Poly(_)) => true,
            _ => false,
        };
        if ok {
            Ok(())
        } else if let (Semiring::Finite(r), Element::Finite(i)) = (self, e) {
            Err(Error::MalformedTable(format!("index {i} outside 0..{}", r.order())))
        } else {
            Err(Error::KindMismatch {
                expected: self.kind(),
                found: e.kind_name(),
            })
        }
    }

    pub fn add(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (self, a, b) {
            (Semiring::Finite(r), Element::Finite(x), Element::Finite(y)) => Element::Finite(r.add(*x, *y)),
            (Semiring::NatPlusTimes, Element::Nat(x), Element::Nat(y)) => Element::Nat(x + y),
            (Semiring::NatGcdTimes, Element::Nat(x), Element::Nat(y)) => Element::Nat(x.gcd(y)),
            (Semiring::NatPoly, Element::Poly(x), Element::Poly(y)) => Element::Poly(x.add(y)),
            _ => unreachable!("checked above"),
        })
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (self, a, b) {
            (Semiring::Finite(r), Element::Finite(x), Element::Finite(y)) => Element::Finite(r.mul(*x, *y)),
            (Semiring::NatPlusTimes | Semiring::NatGcdTimes, Element::Nat(x), Element::Nat(y)) => Element::Nat(x * y),
            (Semiring::NatPoly, Element::Poly(x), Element::Poly(y)) => Element::Poly(x.mul(y)),
            _ => unreachable!("checked above"),
        })
    }

    pub fn eq(&self, a: &Element, b: &Element) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        Ok(a == b)
    }

    pub fn pow(&self, a: &Element, n: u32) -> Result<Element> {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    /// Additive hypotheses of the structure theorems.
    ///
    /// Built-in values:
    /// * `(N0, +, ·)`: ordinary arithmetic, all three hold.
    /// * `(N0, gcd, ·)`: `gcd(4, 2) = gcd(6, 2)` breaks cancellation, `gcd(a, b) = 0`
    ///   forces `a = b = 0`, and no `x` has `gcd(2, x) = 3` or `gcd(3, x) = 2`.
    /// * `N[x]`: cancellative and zerosumfree coefficientwise; `1` and `x`
    ///   differ by no polynomial in either direction.
    pub fn structure_flags(&self) -> StructureFlags {
        match self {
            Semiring::Finite(r) => r.structure_flags(),
            Semiring::NatPlusTimes => StructureFlags {
                additively_cancellative: true,
                zerosumfree: true,
                yoked: true,
            },
            Semiring::NatGcdTimes => StructureFlags {
                additively_cancellative: false,
                zerosumfree: true,
                yoked: false,
            },
            Semiring::NatPoly => StructureFlags {
                additively_cancellative: true,
                zerosumfree: true,
                yoked: false,
            },
        }
    }
}
