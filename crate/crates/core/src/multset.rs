//! Finitely generated multiplicative submonoids.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith;
use crate::config::Bounds;
use crate::error::{Error, Result};
use crate::ideal::{Ideal, Repr};
use crate::semiring::{ElemSet, Element, Poly, Semiring};
use crate::verdict::{Scope, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MultKind {
    /// The monoid generated by the listed elements.
    Generated,
    /// All odd naturals; only meaningful over `(N0, +, ·)`.
    Odds,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultSet {
    ambient: Semiring,
    kind: MultKind,
    /// Normalized generators: sorted, deduplicated, unity removed.
    gens: Vec<Element>,
    /// The whole monoid, for finite carriers.
    finite: Option<ElemSet>,
}

/// Validates generators and builds the generated monoid.
pub fn mult_set(ambient: &Semiring, gens: &[Element]) -> Result<MultSet> {
    MultSet::new(ambient, gens)
}

impl MultSet {
    pub fn new(ambient: &Semiring, gens: &[Element]) -> Result<MultSet> {
        for g in gens {
            ambient.check(g)?;
        }
        let zero = ambient.zero();
        let one = ambient.one();
        if gens.contains(&zero) {
            return Err(Error::ZeroInSet);
        }
        let mut norm: Vec<Element> = gens.iter().filter(|g| **g != one).cloned().collect();
        norm.sort();
        norm.dedup();
        let finite = match ambient {
            Semiring::Finite(r) => {
                let set = r.monoid_closure(ElemSet::from_elems(norm.iter().filter_map(Element::as_finite)));
                if set.contains(r.zero()) {
                    return Err(Error::ZeroInSet);
                }
                Some(set)
            }
            _ => None,
        };
        Ok(MultSet {
            ambient: ambient.clone(),
            kind: MultKind::Generated,
            gens: norm,
            finite,
        })
    }

    /// `{1}`.
    pub fn trivial(ambient: &Semiring) -> MultSet {
        MultSet::new(ambient, &[]).expect("unity never generates zero")
    }

    /// The odd naturals in `(N0, +, ·)`; not finitely generated.
    pub fn odds(ambient: &Semiring) -> Result<MultSet> {
        if *ambient != Semiring::NatPlusTimes {
            return Err(Error::Unsupported(format!("odds over {}", ambient.kind())));
        }
        Ok(MultSet {
            ambient: ambient.clone(),
            kind: MultKind::Odds,
            gens: Vec::new(),
            finite: None,
        })
    }

    pub fn ambient(&self) -> &Semiring {
        &self.ambient
    }

    pub fn kind(&self) -> MultKind {
        self.kind
    }

    pub fn generators(&self) -> &[Element] {
        &self.gens
    }

    pub fn finite_set(&self) -> Option<ElemSet> {
        self.finite
    }

    pub fn is_trivial(&self) -> bool {
        self.kind == MultKind::Generated && self.gens.is_empty()
            || self.finite.is_some_and(|s| s.len() == 1)
    }

    fn nat_gens(&self) -> Result<Vec<u64>> {
        self.gens
            .iter()
            .map(|g| g.as_u64().ok_or_else(|| Error::Overflow(g.to_string())))
            .collect()
    }

    /// Primes dividing some generator.
    pub fn prime_support(&self) -> Result<Vec<u64>> {
        if !self.ambient.is_nat() {
            return Err(Error::Unsupported(format!("prime support over {}", self.ambient.kind())));
        }
        if self.kind == MultKind::Odds {
            return Err(Error::Unsupported("prime support of the odd naturals is infinite".into()));
        }
        let mut primes = BTreeSet::new();
        for g in self.nat_gens()? {
            primes.extend(arith::factor(g)?.primes());
        }
        Ok(primes.into_iter().collect())
    }

    /// Whether every prime of `n` can occur in some element of the set.
    pub(crate) fn covers_primes_of(&self, n: u64) -> Result<bool> {
        if n == 0 {
            return Ok(false);
        }
        let f = arith::factor(n)?;
        if self.kind == MultKind::Odds {
            return Ok(f.exponent(2) == 0);
        }
        let support = self.prime_support()?;
        let covered = f.primes().all(|p| support.contains(&p));
        Ok(covered)
    }

    /// Bounded sample of the set in ascending order: all of a finite monoid,
    /// products of generators with exponents up to `exp_bound`, or the first odd numbers.
    pub fn ball(&self, bounds: &Bounds) -> Vec<Element> {
        if let Some(set) = self.finite {
            return set.iter().map(Element::Finite).collect();
        }
        match (&self.ambient, self.kind) {
            (_, MultKind::Odds) => (0..=bounds.exp_bound as u64).map(|k| Element::nat(2 * k + 1)).collect(),
            (Semiring::NatPoly, _) => {
                let gens: Vec<&Poly> = self.gens.iter().filter_map(Element::as_poly).collect();
                let mut acc = vec![Poly::one()];
                for g in gens {
                    let mut next = Vec::new();
                    for a in &acc {
                        let mut p = a.clone();
                        for _ in 0..=bounds.exp_bound {
                            next.push(p.clone());
                            p = p.mul(g);
                        }
                    }
                    acc = next;
                }
                acc.sort();
                acc.dedup();
                acc.into_iter().map(Element::Poly).collect()
            }
            _ => self.ball_u64(bounds).into_iter().map(Element::nat).collect(),
        }
    }

    /// The ball for natural-number carriers; products that overflow are skipped.
    pub fn ball_u64(&self, bounds: &Bounds) -> Vec<u64> {
        if self.kind == MultKind::Odds {
            return (0..=bounds.exp_bound as u64).map(|k| 2 * k + 1).collect();
        }
        let Ok(gens) = self.nat_gens() else {
            return vec![1];
        };
        let mut acc = vec![1u64];
        for g in gens {
            let mut next = Vec::new();
            for &a in &acc {
                let mut p = Some(a);
                for _ in 0..=bounds.exp_bound {
                    let Some(v) = p else { break };
                    next.push(v);
                    p = v.checked_mul(g);
                }
            }
            acc = next;
        }
        acc.sort_unstable();
        acc.dedup();
        acc
    }

    /// Exact membership; the witness lists generators whose product is `x`.
    pub fn contains(&self, x: &Element) -> Result<Verdict> {
        self.ambient.check(x)?;
        if let Some(set) = self.finite {
            let i = x.as_finite().expect("checked");
            return Ok(Verdict::decide(set.contains(i), Scope::Exhaustive, vec![x.clone()]));
        }
        if self.kind == MultKind::Odds {
            let v = x.as_nat().expect("checked");
            let odd = v.bit(0);
            return Ok(Verdict::decide(odd, Scope::ClosedForm, vec![x.clone()]));
        }
        let found = self.factor_over_gens(x);
        Ok(match found {
            Some(parts) => Verdict::proved(Scope::ClosedForm, parts),
            None => Verdict::disproved(Scope::ClosedForm, vec![x.clone()]),
        })
    }

    /// Depth-first division by generators. Every step strictly shrinks the
    /// remaining cofactor, so the search terminates.
    fn factor_over_gens(&self, x: &Element) -> Option<Vec<Element>> {
        let one = self.ambient.one();
        if *x == one {
            return Some(Vec::new());
        }
        for g in &self.gens {
            let q = match (x, g) {
                (Element::Nat(a), Element::Nat(b)) => {
                    if a.is_zero() || !(a % b).is_zero() {
                        continue;
                    }
                    Element::Nat(a / b)
                }
                (Element::Poly(a), Element::Poly(b)) => match a.div_exact(b) {
                    Some(q) if !a.is_zero() => Element::Poly(q),
                    _ => continue,
                },
                _ => continue,
            };
            if let Some(mut rest) = self.factor_over_gens(&q) {
                rest.insert(0, g.clone());
                return Some(rest);
            }
        }
        None
    }

    /// Decides whether `ideal` meets the set.
    pub fn intersects_ideal(&self, ideal: &Ideal, bounds: &Bounds) -> Result<Verdict> {
        if *ideal.ambient() != self.ambient {
            return Err(Error::AmbientMismatch);
        }
        if let (Some(s), Some(i)) = (self.finite, ideal.finite_set()) {
            let meet = s.intersect(i);
            return Ok(match meet.first() {
                Some(w) => Verdict::proved(Scope::Exhaustive, vec![Element::Finite(w)]),
                None => Verdict::disproved(Scope::Exhaustive, Vec::new()),
            });
        }
        match ideal.repr() {
            Repr::Gcd(g) => {
                let g = *g;
                if !self.covers_primes_of(g)? {
                    return Ok(Verdict::disproved(Scope::ClosedForm, Vec::new()));
                }
                let found = self.ball_u64(bounds).into_iter().find(|s| s % g == 0);
                let w = match found {
                    Some(s) => BigUint::from(s),
                    None => self.dominating_element(g)?,
                };
                Ok(Verdict::proved(Scope::ClosedForm, vec![Element::Nat(w)]))
            }
            Repr::Plus(sm) => {
                if sm.contains_u128(1) {
                    return Ok(Verdict::proved(Scope::ClosedForm, vec![Element::nat(1)]));
                }
                let d = sm.gcd();
                let grows = self.kind == MultKind::Odds || !self.gens.is_empty();
                if !grows || !self.covers_primes_of(d)? {
                    return Ok(Verdict::disproved(Scope::ClosedForm, Vec::new()));
                }
                if let Some(s) = self.ball_u64(bounds).into_iter().find(|&s| sm.contains_u128(s as u128)) {
                    return Ok(Verdict::proved(Scope::ClosedForm, vec![Element::nat(s)]));
                }
                if self.kind == MultKind::Odds {
                    // d is odd; odd multiples of d eventually pass the conductor.
                    let mut k = 1u128;
                    loop {
                        let s = k * d as u128;
                        if sm.contains_u128(s) {
                            return Ok(Verdict::proved(Scope::ClosedForm, vec![Element::Nat(BigUint::from(s))]));
                        }
                        k += 2;
                    }
                }
                let base = self.dominating_element(d.max(2))?;
                let mut s = base.clone();
                while !sm.contains(&s) {
                    s *= &base;
                }
                Ok(Verdict::proved(Scope::ClosedForm, vec![Element::Nat(s)]))
            }
            Repr::Poly { .. } => {
                for s in self.ball(bounds) {
                    if ideal.member(&s)? {
                        return Ok(Verdict::proved(Scope::Bounded, vec![s]).with_bounds(*bounds));
                    }
                }
                Ok(Verdict::unknown(*bounds))
            }
            Repr::Finite { .. } => unreachable!("finite handled above"),
        }
    }

    /// Some element of the set divisible by `n`: the least one in the ball
    /// when present, otherwise a constructed one.
    pub(crate) fn element_divisible_by(&self, n: u64, bounds: &Bounds) -> Result<Option<Element>> {
        if let Some(s) = self.ball_u64(bounds).into_iter().find(|s| n != 0 && s % n == 0) {
            return Ok(Some(Element::nat(s)));
        }
        if !self.covers_primes_of(n)? {
            return Ok(None);
        }
        if self.kind == MultKind::Odds {
            return Ok(Some(Element::nat(n)));
        }
        Ok(Some(Element::Nat(self.dominating_element(n)?)))
    }

    /// An element of the set divisible by `n`, assuming every prime of `n`
    /// occurs in some generator: the generator product raised to the largest
    /// exponent of `n`.
    fn dominating_element(&self, n: u64) -> Result<BigUint> {
        let f = arith::factor(n)?;
        let e = f.factors.values().copied().max().unwrap_or(1);
        let prod: BigUint = self.nat_gens()?.into_iter().map(BigUint::from).product();
        if prod.is_one() {
            return Ok(prod);
        }
        Ok(prod.pow(e))
    }
}

impl fmt::Display for MultSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.kind == MultKind::Odds {
            return write!(f, "odds");
        }
        if self.gens.is_empty() {
            return write!(f, "{{1}}");
        }
        let parts: Vec<String> = self.gens.iter().map(ToString::to_string).collect();
        write!(f, "<{}>", parts.join(","))
    }
}

impl Serialize for MultSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("MultSet", 3)?;
        st.serialize_field("semiring", &self.ambient.kind())?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("generators", &self.gens)?;
        st.end()
    }
}
