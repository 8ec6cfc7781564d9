//! Finitely generated ideals: membership, lattice operations, colons,
//! k-closures, radicals and S-radicals.

pub mod additive;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith;
use crate::config::Bounds;
use crate::error::{Error, Result};
use crate::multset::{MultKind, MultSet};
use crate::semiring::{ElemSet, Element, Poly, Semiring};
use crate::verdict::{Scope, Verdict};

pub use additive::Submonoid;

/// Largest exponent tried when a closed form guarantees some power lands in
/// the ideal and only the least one is wanted.
const POWER_SEARCH_CAP: u32 = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Repr {
    Finite { set: ElemSet, gens: Vec<usize> },
    /// `(g) = gN0`.
    Gcd(u64),
    Plus(Submonoid),
    /// With `k_closed`, membership is divisibility in `Z[x]` rather than `N[x]`.
    Poly { gens: Vec<Poly>, k_closed: bool },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    ambient: Semiring,
    repr: Repr,
}

/// The ideal generated by `gens`.
pub fn ideal(ambient: &Semiring, gens: &[Element]) -> Result<Ideal> {
    Ideal::new(ambient, gens)
}

fn to_u64(e: &Element) -> Result<u64> {
    e.as_u64().ok_or_else(|| Error::Overflow(e.to_string()))
}

impl Ideal {
    pub fn new(ambient: &Semiring, gens: &[Element]) -> Result<Ideal> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for g in gens {
            ambient.check(g)?;
        }
        let repr = match ambient {
            Semiring::Finite(r) => {
                let set = r.closure(ElemSet::from_elems(gens.iter().filter_map(Element::as_finite)));
                Repr::Finite {
                    set,
                    gens: r.canonical_generators(set),
                }
            }
            Semiring::NatGcdTimes => {
                let mut g = 0u64;
                for e in gens {
                    g = g.gcd(&to_u64(e)?);
                }
                Repr::Gcd(g)
            }
            Semiring::NatPlusTimes => {
                let vals = gens.iter().map(to_u64).collect::<Result<Vec<_>>>()?;
                Repr::Plus(Submonoid::generated(&vals)?)
            }
            Semiring::NatPoly => {
                let mut ps: Vec<Poly> = gens.iter().filter_map(Element::as_poly).filter(|p| !p.is_zero()).cloned().collect();
                ps.sort();
                ps.dedup();
                Repr::Poly {
                    gens: ps,
                    k_closed: false,
                }
            }
        };
        Ok(Ideal {
            ambient: ambient.clone(),
            repr,
        })
    }

    /// Wraps a subset already known to be an ideal of a finite semiring.
    pub(crate) fn from_finite_set(ambient: &Semiring, set: ElemSet) -> Ideal {
        let r = ambient.as_finite().expect("finite ambient");
        debug_assert!(r.is_ideal(set));
        Ideal {
            ambient: ambient.clone(),
            repr: Repr::Finite {
                set,
                gens: r.canonical_generators(set),
            },
        }
    }

    pub(crate) fn gcd_ideal(g: u64) -> Ideal {
        Ideal {
            ambient: Semiring::NatGcdTimes,
            repr: Repr::Gcd(g),
        }
    }

    fn plus(sm: Submonoid) -> Ideal {
        Ideal {
            ambient: Semiring::NatPlusTimes,
            repr: Repr::Plus(sm),
        }
    }

    pub fn ambient(&self) -> &Semiring {
        &self.ambient
    }

    pub(crate) fn repr(&self) -> &Repr {
        &self.repr
    }

    pub fn finite_set(&self) -> Option<ElemSet> {
        match &self.repr {
            Repr::Finite { set, .. } => Some(*set),
            _ => None,
        }
    }

    /// Generator of an ideal of `(N0, gcd, ·)`.
    pub fn gcd_generator(&self) -> Option<u64> {
        match self.repr {
            Repr::Gcd(g) => Some(g),
            _ => None,
        }
    }

    pub fn submonoid(&self) -> Option<&Submonoid> {
        match &self.repr {
            Repr::Plus(sm) => Some(sm),
            _ => None,
        }
    }

    /// Canonical normalized generators.
    pub fn generators(&self) -> Vec<Element> {
        match &self.repr {
            Repr::Finite { gens, .. } => {
                if gens.is_empty() {
                    vec![self.ambient.zero()]
                } else {
                    gens.iter().map(|&g| Element::Finite(g)).collect()
                }
            }
            Repr::Gcd(g) => vec![Element::nat(*g)],
            Repr::Plus(sm) => {
                if sm.is_zero() {
                    vec![Element::nat(0)]
                } else {
                    sm.generators().iter().map(|&g| Element::nat(g)).collect()
                }
            }
            Repr::Poly { gens, .. } => {
                if gens.is_empty() {
                    vec![Element::Poly(Poly::zero())]
                } else {
                    gens.iter().cloned().map(Element::Poly).collect()
                }
            }
        }
    }

    fn same_ambient(&self, other: &Ideal) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    fn principal_poly(&self) -> Result<(Option<&Poly>, bool)> {
        match &self.repr {
            Repr::Poly { gens, k_closed } if gens.len() <= 1 => Ok((gens.first(), *k_closed)),
            Repr::Poly { .. } => Err(Error::Unsupported(
                "only principal ideals of N[x] are supported".into(),
            )),
            _ => unreachable!("poly representation expected"),
        }
    }

    pub fn member(&self, x: &Element) -> Result<bool> {
        self.ambient.check(x)?;
        Ok(match (&self.repr, x) {
            (Repr::Finite { set, .. }, Element::Finite(i)) => set.contains(*i),
            (Repr::Gcd(g), Element::Nat(v)) => {
                if *g == 0 {
                    v.is_zero()
                } else {
                    (v % *g).is_zero()
                }
            }
            (Repr::Plus(sm), Element::Nat(v)) => sm.contains(v),
            (Repr::Poly { .. }, Element::Poly(f)) => {
                let (g, k_closed) = self.principal_poly()?;
                match g {
                    None => f.is_zero(),
                    Some(g) if k_closed => f.div_integer(g).is_some(),
                    Some(g) => f.div_exact(g).is_some(),
                }
            }
            _ => unreachable!("checked"),
        })
    }

    /// Membership fast path for natural-number carriers.
    pub(crate) fn member_u128(&self, x: u128) -> bool {
        match &self.repr {
            Repr::Gcd(0) => x == 0,
            Repr::Gcd(g) => x.is_multiple_of(*g as u128),
            Repr::Plus(sm) => sm.contains_u128(x),
            _ => unreachable!("natural-number ideal expected"),
        }
    }

    pub fn is_unit(&self) -> Result<bool> {
        self.member(&self.ambient.one())
    }

    pub fn is_zero_ideal(&self) -> bool {
        match &self.repr {
            Repr::Finite { set, .. } => set.len() == 1,
            Repr::Gcd(g) => *g == 0,
            Repr::Plus(sm) => sm.is_zero(),
            Repr::Poly { gens, .. } => gens.is_empty(),
        }
    }

    /// `other ⊆ self`, decided by generator membership.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.same_ambient(other)?;
        if let (Some(a), Some(b)) = (self.finite_set(), other.finite_set()) {
            return Ok(b.is_subset(a));
        }
        for g in other.generators() {
            if !self.member(&g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality by mutual generator membership.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ambient(other)?;
        match (&self.repr, &other.repr) {
            (Repr::Finite { set: a, .. }, Repr::Finite { set: b, .. }) => {
                Ok(Ideal::from_finite_set(&self.ambient, a.intersect(*b)))
            }
            (Repr::Gcd(a), Repr::Gcd(b)) => {
                let l = arith::lcm(*a, *b).ok_or_else(|| Error::Overflow(format!("lcm({a}, {b})")))?;
                Ok(Ideal::gcd_ideal(l))
            }
            (Repr::Plus(a), Repr::Plus(b)) => {
                if a.is_zero() || b.is_zero() {
                    return Ok(Ideal::plus(Submonoid::zero()));
                }
                let period = arith::lcm(a.gcd(), b.gcd())
                    .ok_or_else(|| Error::Overflow("lcm of ideal periods".into()))?;
                let conductor = a.conductor().max(b.conductor());
                let sm = Submonoid::recover(period, conductor, |x| {
                    a.contains_u128(x as u128) && b.contains_u128(x as u128)
                })?;
                Ok(Ideal::plus(sm))
            }
            _ => Err(Error::Unsupported("intersection of ideals of N[x]".into())),
        }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ambient(other)?;
        match (&self.repr, &other.repr) {
            (Repr::Finite { set: a, .. }, Repr::Finite { set: b, .. }) => {
                let r = self.ambient.as_finite().expect("finite");
                Ok(Ideal::from_finite_set(&self.ambient, r.closure(a.union(*b))))
            }
            (Repr::Gcd(a), Repr::Gcd(b)) => Ok(Ideal::gcd_ideal(a.gcd(b))),
            (Repr::Plus(a), Repr::Plus(b)) => {
                let gens: Vec<u64> = a.generators().iter().chain(b.generators()).copied().collect();
                Ok(Ideal::plus(Submonoid::generated(&gens)?))
            }
            _ => Err(Error::Unsupported("sum of ideals of N[x]".into())),
        }
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ambient(other)?;
        match (&self.repr, &other.repr) {
            (Repr::Finite { set: a, .. }, Repr::Finite { set: b, .. }) => {
                let r = self.ambient.as_finite().expect("finite");
                let prods = ElemSet::from_elems(a.iter().flat_map(|x| b.iter().map(move |y| r.mul(x, y))));
                Ok(Ideal::from_finite_set(&self.ambient, r.closure(prods)))
            }
            (Repr::Gcd(a), Repr::Gcd(b)) => {
                let p = a.checked_mul(*b).ok_or_else(|| Error::Overflow(format!("{a}·{b}")))?;
                Ok(Ideal::gcd_ideal(p))
            }
            (Repr::Plus(a), Repr::Plus(b)) => {
                let mut gens = Vec::new();
                for &x in a.generators() {
                    for &y in b.generators() {
                        gens.push(x.checked_mul(y).ok_or_else(|| Error::Overflow(format!("{x}·{y}")))?);
                    }
                }
                Ok(Ideal::plus(Submonoid::generated(&gens)?))
            }
            _ => Err(Error::Unsupported("product of ideals of N[x]".into())),
        }
    }

    /// `I : s = {x : s·x ∈ I}`.
    pub fn colon(&self, s: &Element) -> Result<Ideal> {
        self.ambient.check(s)?;
        match &self.repr {
            Repr::Finite { set, .. } => {
                let r = self.ambient.as_finite().expect("finite");
                let c = r.colon(*set, s.as_finite().expect("checked"));
                Ok(Ideal::from_finite_set(&self.ambient, c))
            }
            Repr::Gcd(g) => {
                let s = to_u64(s)?;
                if *g == 0 && s == 0 {
                    return Ok(Ideal::gcd_ideal(1));
                }
                Ok(Ideal::gcd_ideal(g / g.gcd(&s)))
            }
            Repr::Plus(sm) => {
                let s = to_u64(s)?;
                if s == 0 {
                    return Ok(Ideal::plus(Submonoid::generated(&[1])?));
                }
                if sm.is_zero() {
                    return Ok(Ideal::plus(Submonoid::zero()));
                }
                let period = sm.gcd() / sm.gcd().gcd(&s);
                let conductor = sm.conductor().div_ceil(s as u128);
                let out = Submonoid::recover(period, conductor, |x| sm.contains_u128(x as u128 * s as u128))?;
                Ok(Ideal::plus(out))
            }
            Repr::Poly { .. } => Err(Error::Unsupported("colon ideals in N[x]".into())),
        }
    }

    /// Least k-ideal containing this one.
    pub fn k_closure(&self) -> Result<Ideal> {
        match &self.repr {
            Repr::Finite { set, .. } => {
                let r = self.ambient.as_finite().expect("finite");
                Ok(Ideal::from_finite_set(&self.ambient, r.k_closure(*set)))
            }
            Repr::Gcd(_) => Ok(self.clone()),
            Repr::Plus(sm) => {
                let d = sm.gcd();
                Ok(Ideal::plus(Submonoid::generated(&[d])?))
            }
            Repr::Poly { .. } => {
                let (g, _) = self.principal_poly()?;
                // f = q·g with q = q⁺ - q⁻ in Z[x] gives f + q⁻g = q⁺g, so every
                // Z[x]-multiple of g lies in the closure, and those form a k-ideal.
                Ok(Ideal {
                    ambient: Semiring::NatPoly,
                    repr: Repr::Poly {
                        gens: g.into_iter().cloned().collect(),
                        k_closed: true,
                    },
                })
            }
        }
    }

    /// Is `a + b ∈ I, a ∈ I ⇒ b ∈ I`? Disproofs carry `(a, b)` with `b ∉ I`.
    pub fn is_k_ideal(&self, bounds: &Bounds) -> Result<Verdict> {
        match &self.repr {
            Repr::Finite { set, .. } => {
                let r = self.ambient.as_finite().expect("finite");
                Ok(match r.k_violation(*set) {
                    None => Verdict::proved(Scope::Exhaustive, Vec::new()),
                    Some((a, b)) => Verdict::disproved(Scope::Exhaustive, vec![Element::Finite(a), Element::Finite(b)]),
                })
            }
            // d | a and d | gcd(a, b) force d | b.
            Repr::Gcd(_) => Ok(Verdict::proved(Scope::ClosedForm, Vec::new())),
            Repr::Plus(sm) => {
                let d = sm.gcd();
                if sm.is_zero() || sm.generators() == [d] {
                    return Ok(Verdict::proved(Scope::ClosedForm, Vec::new()));
                }
                let found = (0..=bounds.elem_bound)
                    .filter(|&a| sm.contains_u128(a as u128))
                    .find_map(|a| {
                        (0..=bounds.elem_bound)
                            .find(|&b| !sm.contains_u128(b as u128) && sm.contains_u128(a as u128 + b as u128))
                            .map(|b| (a, b))
                    });
                // d itself is outside I, while large multiples of d are inside.
                let (a, b) = match found {
                    Some(p) => p,
                    None => {
                        let c = (sm.conductor() as u64).max(d);
                        (c.div_ceil(d) * d, d)
                    }
                };
                Ok(Verdict::disproved(Scope::ClosedForm, vec![Element::nat(a), Element::nat(b)]))
            }
            Repr::Poly { .. } => {
                let (g, k_closed) = self.principal_poly()?;
                let Some(g) = g else {
                    return Ok(Verdict::proved(Scope::ClosedForm, Vec::new()));
                };
                if k_closed || g.term_count() == 1 {
                    // Dividing a polynomial with nonnegative coefficients by c·x^k
                    // leaves nonnegative coefficients whenever the result is integral.
                    return Ok(Verdict::proved(Scope::ClosedForm, Vec::new()));
                }
                Ok(match poly_k_witness(g, bounds) {
                    Some((a, b)) => Verdict::disproved(Scope::ClosedForm, vec![Element::Poly(a), Element::Poly(b)]),
                    None => Verdict::unknown(*bounds),
                })
            }
        }
    }

    /// Does some `x^n`, `n ≥ 1`, lie in the ideal? Proofs carry `[x, n]`.
    pub fn radical_member(&self, x: &Element, n_max: u32) -> Result<Verdict> {
        self.ambient.check(x)?;
        let proved = |n: u32, scope| Verdict::proved(scope, vec![x.clone(), Element::nat(n as u64)]);
        match &self.repr {
            Repr::Finite { set, .. } => {
                let r = self.ambient.as_finite().expect("finite");
                Ok(match r.power_in(x.as_finite().expect("checked"), *set) {
                    Some(n) => proved(n, Scope::Exhaustive),
                    None => Verdict::disproved(Scope::Exhaustive, vec![x.clone()]),
                })
            }
            Repr::Gcd(g) => {
                let v = x.as_nat().expect("checked");
                Ok(match least_power_in_gcd(v, *g)? {
                    Some(n) => proved(n, Scope::ClosedForm),
                    None => Verdict::disproved(Scope::ClosedForm, vec![x.clone()]),
                })
            }
            Repr::Plus(sm) => {
                let v = x.as_nat().expect("checked");
                if !plus_radical_decides(sm, v)? {
                    return Ok(Verdict::disproved(Scope::ClosedForm, vec![x.clone()]));
                }
                let n = least_power_in(|p| sm.contains(p), v)
                    .expect("closed form guarantees a power in the ideal");
                Ok(proved(n, Scope::ClosedForm))
            }
            Repr::Poly { .. } => {
                let f = x.as_poly().expect("checked");
                let mut p = f.clone();
                for n in 1..=n_max {
                    if self.member(&Element::Poly(p.clone()))? {
                        return Ok(proved(n, Scope::Bounded));
                    }
                    p = p.mul(f);
                }
                Ok(Verdict::unknown(Bounds::default().with_rad_bound(n_max)))
            }
        }
    }

    /// Generator form of `√I`.
    pub fn radical(&self) -> Result<Ideal> {
        match &self.repr {
            Repr::Finite { set, .. } => {
                let r = self.ambient.as_finite().expect("finite");
                Ok(Ideal::from_finite_set(&self.ambient, r.radical(*set)))
            }
            Repr::Gcd(g) => Ok(Ideal::gcd_ideal(arith::radical(*g))),
            _ => Err(Error::Unsupported(format!(
                "radical generator form over {}; use radical membership",
                self.ambient.kind()
            ))),
        }
    }

    /// Does `s·x^n ∈ I` for some `s ∈ S`, `n ≥ 1`? Proofs carry `[s, n]`.
    pub fn s_radical_member(&self, mult: &MultSet, x: &Element, bounds: &Bounds) -> Result<Verdict> {
        self.ambient.check(x)?;
        if *mult.ambient() != self.ambient {
            return Err(Error::AmbientMismatch);
        }
        let proved = |s: Element, n: u32, scope| Verdict::proved(scope, vec![s, Element::nat(n as u64)]);
        match &self.repr {
            Repr::Finite { set, .. } => {
                let r = self.ambient.as_finite().expect("finite");
                let xi = x.as_finite().expect("checked");
                for s in mult.finite_set().expect("finite monoid").iter() {
                    if let Some(n) = r.power_in(xi, r.colon(*set, s)) {
                        return Ok(proved(Element::Finite(s), n, Scope::Exhaustive));
                    }
                }
                Ok(Verdict::disproved(Scope::Exhaustive, vec![x.clone()]))
            }
            Repr::Gcd(_) | Repr::Plus(_) => {
                let v = x.as_nat().expect("checked");
                let holds = match &self.repr {
                    Repr::Gcd(g) => {
                        let rad = gcd_s_radical(*g, mult)?;
                        if rad == 0 {
                            v.is_zero()
                        } else {
                            (v % rad).is_zero()
                        }
                    }
                    Repr::Plus(sm) => plus_s_radical_decides(sm, mult, v)?,
                    _ => unreachable!(),
                };
                if !holds {
                    return Ok(Verdict::disproved(Scope::ClosedForm, vec![x.clone()]));
                }
                for s in mult.ball_u64(bounds) {
                    let mut p = BigUint::from(s) * v;
                    for n in 1..=bounds.rad_bound {
                        if self.member(&Element::Nat(p.clone()))? {
                            return Ok(proved(Element::nat(s), n, Scope::ClosedForm));
                        }
                        p *= v;
                    }
                }
                let base = growth_base(mult, &self.repr);
                let mut s = base.clone();
                let mut p = v.clone();
                for n in 1..=POWER_SEARCH_CAP {
                    if self.member(&Element::Nat(&s * &p))? {
                        return Ok(proved(Element::Nat(s), n, Scope::ClosedForm));
                    }
                    s *= &base;
                    p *= v;
                }
                unreachable!("closed form guarantees a witness")
            }
            Repr::Poly { .. } => {
                let f = x.as_poly().expect("checked");
                for s in mult.ball(bounds) {
                    let sp = s.as_poly().expect("poly ball");
                    let mut p = sp.mul(f);
                    for n in 1..=bounds.rad_bound {
                        if self.member(&Element::Poly(p.clone()))? {
                            return Ok(proved(s, n, Scope::Bounded).with_bounds(*bounds));
                        }
                        p = p.mul(f);
                    }
                }
                Ok(Verdict::unknown(*bounds))
            }
        }
    }

    /// Generator form of the S-radical.
    pub fn s_radical(&self, mult: &MultSet) -> Result<Ideal> {
        if *mult.ambient() != self.ambient {
            return Err(Error::AmbientMismatch);
        }
        match &self.repr {
            Repr::Finite { set, .. } => {
                let r = self.ambient.as_finite().expect("finite");
                let s = mult.finite_set().expect("finite monoid");
                Ok(Ideal::from_finite_set(&self.ambient, r.s_radical(*set, s)))
            }
            Repr::Gcd(g) => Ok(Ideal::gcd_ideal(gcd_s_radical(*g, mult)?)),
            _ => Err(Error::Unsupported(format!(
                "S-radical generator form over {}; use S-radical membership",
                self.ambient.kind()
            ))),
        }
    }
}

/// `√ˢ(g)` in `(N0, gcd, ·)`: the radical of `g` with the primes of S removed.
pub(crate) fn gcd_s_radical(g: u64, mult: &MultSet) -> Result<u64> {
    if g == 0 {
        return Ok(0);
    }
    let support = mult.prime_support()?;
    Ok(arith::radical(arith::strip_primes(g, &support)))
}

fn least_power_in_gcd(x: &BigUint, g: u64) -> Result<Option<u32>> {
    if g == 0 {
        return Ok(x.is_zero().then_some(1));
    }
    if x.is_zero() || g == 1 {
        return Ok(Some(1));
    }
    let f = arith::factor(g)?;
    let mut n = 1u32;
    for (&p, &e) in &f.factors {
        let mut v = 0u32;
        let mut y = x.clone();
        while v < e && (&y % p).is_zero() {
            y /= p;
            v += 1;
        }
        if v == 0 {
            return Ok(None);
        }
        n = n.max(e.div_ceil(v));
    }
    Ok(Some(n))
}

fn least_power_in(member: impl Fn(&BigUint) -> bool, x: &BigUint) -> Option<u32> {
    let mut p = x.clone();
    for n in 1..=POWER_SEARCH_CAP {
        if member(&p) {
            return Some(n);
        }
        p *= x;
    }
    None
}

/// `x ∈ √I` over `(N0, +, ·)`: powers of `x ≥ 2` eventually pass the
/// conductor, so only divisibility by the period matters.
fn plus_radical_decides(sm: &Submonoid, x: &BigUint) -> Result<bool> {
    if x.is_zero() {
        return Ok(true);
    }
    if sm.is_zero() {
        return Ok(false);
    }
    if x.is_one() {
        return Ok(sm.contains_u128(1));
    }
    let d = sm.gcd();
    let f = arith::factor(d)?;
    let all = f.primes().all(|p| (x % p).is_zero());
    Ok(all)
}

/// `x ∈ √ˢI` over `(N0, +, ·)`: `s·x^n` grows without bound unless `x = 1`
/// and S is trivial, so membership reduces to covering the primes of the period.
fn plus_s_radical_decides(sm: &Submonoid, mult: &MultSet, x: &BigUint) -> Result<bool> {
    if x.is_zero() {
        return Ok(true);
    }
    if sm.is_zero() {
        return Ok(false);
    }
    let grows = !x.is_one() || mult.kind() == MultKind::Odds || !mult.generators().is_empty();
    if !grows {
        return Ok(sm.contains_u128(1));
    }
    let d = sm.gcd();
    let f = arith::factor(d)?;
    let support = match mult.kind() {
        MultKind::Odds => None,
        MultKind::Generated => Some(mult.prime_support()?),
    };
    let covered = f.primes().all(|p| {
        (x % p).is_zero()
            || match &support {
                None => p != 2,
                Some(sp) => sp.contains(&p),
            }
    });
    Ok(covered)
}

/// An element of S whose powers supply every prime of S that the ideal needs.
fn growth_base(mult: &MultSet, repr: &Repr) -> BigUint {
    match mult.kind() {
        MultKind::Odds => {
            let d = match repr {
                Repr::Plus(sm) => sm.gcd(),
                Repr::Gcd(g) => *g,
                _ => 1,
            };
            let mut odd = d.max(1);
            while odd % 2 == 0 {
                odd /= 2;
            }
            BigUint::from(odd.max(3))
        }
        MultKind::Generated => mult
            .generators()
            .iter()
            .filter_map(Element::as_nat)
            .fold(BigUint::one(), |acc, g| acc * g),
    }
}

/// Least `(a, b)` with `a ∈ ⟨g⟩`, `a + b ∈ ⟨g⟩`, `b ∉ ⟨g⟩`, found by
/// enumerating integer cofactors `q` with a negative coefficient such that
/// `b = q·g` has none.
fn poly_k_witness(g: &Poly, bounds: &Bounds) -> Option<(Poly, Poly)> {
    let len = bounds.poly_degree + 1;
    let c = bounds.poly_coeff as i64;
    let gi: Vec<BigInt> = g.coeffs().iter().map(|x| BigInt::from(x.clone())).collect();
    let mut best: Option<(Poly, Poly)> = None;
    let mut q = vec![-c; len];
    loop {
        if q.iter().any(|&v| v < 0) {
            let mut prod = vec![BigInt::zero(); len + gi.len() - 1];
            for (i, &qi) in q.iter().enumerate() {
                if qi == 0 {
                    continue;
                }
                for (j, gj) in gi.iter().enumerate() {
                    prod[i + j] += gj * qi;
                }
            }
            if prod.iter().all(|v| *v >= BigInt::zero()) && prod.iter().any(|v| !v.is_zero()) {
                let qb: Vec<BigInt> = q.iter().map(|&v| BigInt::from(v)).collect();
                let (_, neg) = Poly::split_signed(&qb);
                let a = neg.mul(g);
                let b = Poly::new(prod.iter().map(|v| v.to_biguint().expect("nonnegative")).collect());
                if best.as_ref().is_none_or(|(ba, bb)| (&a, &b) < (ba, bb)) {
                    best = Some((a, b));
                }
            }
        }
        let mut i = 0;
        loop {
            if i == len {
                return best;
            }
            if q[i] < c {
                q[i] += 1;
                break;
            }
            q[i] = -c;
            i += 1;
        }
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators().iter().map(ToString::to_string).collect();
        if matches!(self.repr, Repr::Poly { k_closed: true, .. }) {
            write!(f, "k")?;
        }
        write!(f, "({})", parts.join(", "))
    }
}

impl Serialize for Ideal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Ideal", 2)?;
        st.serialize_field("semiring", &self.ambient.kind())?;
        st.serialize_field("generators", &self.generators())?;
        st.end()
    }
}

impl Ideal {
    /// Size hint for natural-number generators, used to widen probe universes.
    pub(crate) fn nat_generators_u64(&self) -> Vec<u64> {
        self.generators().iter().filter_map(|g| g.as_nat().and_then(ToPrimitive::to_u64)).collect()
    }
}
