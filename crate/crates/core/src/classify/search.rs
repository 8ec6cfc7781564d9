//! Precomputed membership tables for the definitional pair searches.
//!
//! Every prime/primary style predicate asks for the least pair `(x, y)` in
//! a probe universe with `x·y ∈ I` and two side conditions failing. The
//! products are tabulated once as bit rows; each side condition is a mask.

use crate::arith;
use crate::config::Bounds;
use crate::error::{Error, Result};
use crate::ideal::{Ideal, Repr};
use crate::multset::MultSet;
use crate::semiring::{ElemSet, Element};

/// Largest generator whose divisors are added to the probe universe.
const DIVISOR_CAP: u64 = 1 << 40;

#[derive(Debug, Clone)]
pub(crate) struct Bits {
    words: Vec<u64>,
}

impl Bits {
    fn new(len: usize) -> Bits {
        Bits {
            words: vec![0; len.div_ceil(64)],
        }
    }

    fn from_fn(len: usize, f: impl Fn(usize) -> bool) -> Bits {
        let mut b = Bits::new(len);
        for i in 0..len {
            if f(i) {
                b.set(i);
            }
        }
        b
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn first_common(&self, other: &Bits) -> Option<usize> {
        self.words
            .iter()
            .zip(&other.words)
            .enumerate()
            .find_map(|(w, (a, b))| {
                let m = a & b;
                (m != 0).then(|| w * 64 + m.trailing_zeros() as usize)
            })
    }
}

/// A probe universe with products, memberships and S-scaled memberships.
pub(crate) struct Tables {
    pub elems: Vec<Element>,
    pub ball: Vec<Element>,
    /// Whether every quantifier ranged over the whole carrier and all of S.
    pub exhaustive: bool,
    /// `prod[i]` has bit `j` iff `elems[i]·elems[j] ∈ I`.
    prod: Vec<Bits>,
    /// `scaled_out[k]` has bit `i` iff `ball[k]·elems[i] ∉ I`.
    scaled_out: Vec<Bits>,
    /// `scaled_out_rad[k]` has bit `i` iff `ball[k]·elems[i] ∉ √I`.
    scaled_out_rad: Vec<Bits>,
    /// Bit `i` iff `s·elems[i] ∉ I` for every `s ∈ S`.
    sat_out: Bits,
    /// Bit `i` iff `s·elems[i] ∉ √I` for every `s ∈ S`.
    sat_out_rad: Bits,
}

/// Membership shapes of natural-number ideals and their radicals.
#[derive(Clone)]
enum NatShape<'a> {
    /// Only zero.
    ZeroOnly,
    /// Multiples of `g`.
    Gcd(u64),
    /// A submonoid of `(N0, +)`.
    Plus(&'a crate::ideal::additive::Submonoid),
    /// `{0} ∪ {y : r | y, y ≠ 1}`, with 1 added when `unit`; the radical of
    /// a nonzero ideal of `(N0, +, ·)`.
    Multiples { r: u64, unit: bool },
}

impl NatShape<'_> {
    fn of(ideal: &Ideal) -> NatShape<'_> {
        match ideal.repr() {
            Repr::Gcd(0) => NatShape::ZeroOnly,
            Repr::Gcd(g) => NatShape::Gcd(*g),
            Repr::Plus(sm) if sm.is_zero() => NatShape::ZeroOnly,
            Repr::Plus(sm) => NatShape::Plus(sm),
            _ => unreachable!("natural-number ideal expected"),
        }
    }

    fn radical_of(ideal: &Ideal) -> NatShape<'_> {
        match ideal.repr() {
            Repr::Gcd(0) => NatShape::ZeroOnly,
            Repr::Gcd(g) => NatShape::Gcd(arith::radical(*g)),
            Repr::Plus(sm) if sm.is_zero() => NatShape::ZeroOnly,
            Repr::Plus(sm) => NatShape::Multiples {
                r: arith::radical(sm.gcd()),
                unit: sm.contains_u128(1),
            },
            _ => unreachable!("natural-number ideal expected"),
        }
    }

    fn contains(&self, y: u128) -> bool {
        match *self {
            NatShape::ZeroOnly => y == 0,
            NatShape::Gcd(g) => y.is_multiple_of(g as u128),
            NatShape::Plus(sm) => sm.contains_u128(y),
            NatShape::Multiples { r, unit } => y.is_multiple_of(r as u128) && (y != 1 || unit),
        }
    }

    /// Whether `s·a` lies in the set for some `s` in `mult`. Every nonzero
    /// `s` keeps a multiple of `m` only if `S` reaches the primes of `m`,
    /// and a nontrivial `S` then supplies such multiples of any size.
    fn saturates(&self, a: u64, mult: &MultSet) -> Result<bool> {
        if a == 0 || self.contains(a as u128) {
            return Ok(true);
        }
        if mult.is_trivial() {
            return Ok(false);
        }
        let period = match *self {
            NatShape::ZeroOnly => return Ok(false),
            NatShape::Gcd(g) => g,
            NatShape::Plus(sm) => sm.gcd(),
            NatShape::Multiples { r, .. } => r,
        };
        mult.covers_primes_of(period / arith::gcd(period, a))
    }
}

/// Radical membership for a natural-number ideal.
pub(crate) fn nat_radical_contains(ideal: &Ideal, y: u128) -> bool {
    NatShape::radical_of(ideal).contains(y)
}

/// Universe `{0..=elem_bound}` widened by the divisors of each generator,
/// so that factor pairs of a generator are always probed.
pub(crate) fn nat_universe(ideal: &Ideal, bounds: &Bounds) -> Vec<u64> {
    let mut u: Vec<u64> = (0..=bounds.elem_bound).collect();
    for g in ideal.nat_generators_u64() {
        if g != 0 && g <= DIVISOR_CAP {
            u.extend(arith::divisors(g));
        }
    }
    u.sort_unstable();
    u.dedup();
    u
}

impl Tables {
    pub fn build(ideal: &Ideal, mult: &MultSet, bounds: &Bounds) -> Result<Tables> {
        if ideal.finite_set().is_some() {
            Ok(Tables::finite(ideal, mult))
        } else if ideal.ambient().is_nat() {
            Tables::nat(ideal, mult, bounds)
        } else {
            Err(Error::Unsupported(format!(
                "definitional pair search over {}",
                ideal.ambient().kind()
            )))
        }
    }

    fn finite(ideal: &Ideal, mult: &MultSet) -> Tables {
        let r = ideal.ambient().as_finite().expect("finite ambient");
        let set = ideal.finite_set().expect("finite ideal");
        let rad = r.radical(set);
        let n = r.order();
        let monoid = mult.finite_set().unwrap_or(ElemSet::singleton(r.one()));
        let ball = monoid.to_vec();
        let prod = (0..n).map(|i| Bits::from_fn(n, |j| set.contains(r.mul(i, j)))).collect();
        let scaled = |target: ElemSet| -> Vec<Bits> {
            ball.iter()
                .map(|&s| Bits::from_fn(n, |i| !target.contains(r.mul(s, i))))
                .collect()
        };
        let sat = r.saturation(set, monoid);
        let sat_rad = r.saturation(rad, monoid);
        Tables {
            elems: (0..n).map(Element::Finite).collect(),
            exhaustive: true,
            prod,
            scaled_out: scaled(set),
            scaled_out_rad: scaled(rad),
            sat_out: Bits::from_fn(n, |i| !sat.contains(i)),
            sat_out_rad: Bits::from_fn(n, |i| !sat_rad.contains(i)),
            ball: ball.into_iter().map(Element::Finite).collect(),
        }
    }

    fn nat(ideal: &Ideal, mult: &MultSet, bounds: &Bounds) -> Result<Tables> {
        let u = nat_universe(ideal, bounds);
        let ball = mult.ball_u64(bounds);
        let shape = NatShape::of(ideal);
        let rad = NatShape::radical_of(ideal);
        let n = u.len();
        let prod = u
            .iter()
            .map(|&a| Bits::from_fn(n, |j| shape.contains(a as u128 * u[j] as u128)))
            .collect();
        let scaled = |target: &NatShape| -> Vec<Bits> {
            ball.iter()
                .map(|&s| Bits::from_fn(n, |i| !target.contains(s as u128 * u[i] as u128)))
                .collect()
        };
        let mut sat_out = Bits::new(n);
        let mut sat_out_rad = Bits::new(n);
        for (i, &a) in u.iter().enumerate() {
            if !shape.saturates(a, mult)? {
                sat_out.set(i);
            }
            if !rad.saturates(a, mult)? {
                sat_out_rad.set(i);
            }
        }
        Ok(Tables {
            scaled_out: scaled(&shape),
            scaled_out_rad: scaled(&rad),
            elems: u.into_iter().map(Element::nat).collect(),
            ball: ball.into_iter().map(Element::nat).collect(),
            exhaustive: false,
            prod,
            sat_out,
            sat_out_rad,
        })
    }

    /// Least `(x, y)` with `x·y ∈ I`, `x ∈ xs`, `y ∈ ys`.
    fn least_pair(&self, xs: &Bits, ys: &Bits) -> Option<(usize, usize)> {
        (0..self.elems.len())
            .filter(|&i| xs.get(i))
            .find_map(|i| self.prod[i].first_common(ys).map(|j| (i, j)))
    }

    /// Least pair violating the condition for the multiplier `ball[k]`.
    /// The primary form relaxes the first factor to the radical.
    pub fn violation(&self, k: usize, primary: bool) -> Option<(usize, usize)> {
        let xs = if primary { &self.scaled_out_rad[k] } else { &self.scaled_out[k] };
        self.least_pair(xs, &self.scaled_out[k])
    }

    /// Least pair violating the condition for every multiplier of `S` at once.
    pub fn uniform_violation(&self, primary: bool) -> Option<(usize, usize)> {
        let xs = if primary { &self.sat_out_rad } else { &self.sat_out };
        self.least_pair(xs, &self.sat_out)
    }

    pub fn pair(&self, p: (usize, usize)) -> Vec<Element> {
        vec![self.elems[p.0].clone(), self.elems[p.1].clone()]
    }
}
