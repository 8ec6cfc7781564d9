//! Classification of ideals: prime, primary and their S-relative forms,
//! S-k-irreducibility, S-k-maximality and the colon-based criteria.
//!
//! Finite tables are decided exhaustively. Natural-number carriers use
//! bounded probe universes unless a closed form is available, and report
//! which one was used in the verdict scope.

mod search;

use num_bigint::BigUint;
use serde::Serialize;

use crate::arith;
use crate::config::Bounds;
use crate::error::{Error, Result};
use crate::ideal::{Ideal, Repr};
use crate::multset::{MultKind, MultSet};
use crate::semiring::{ElemSet, Element, FiniteSemiring};
use crate::verdict::{Scope, Status, Verdict};

pub(crate) use search::nat_radical_contains;
use search::Tables;

/// Predicate names used in classification reports, in report order.
pub const PREDICATES: [&str; 8] = [
    "prime",
    "primary",
    "k",
    "s_prime",
    "s_primary",
    "s_k_primary",
    "s_k_irreducible",
    "s_k_maximal",
];

fn same_ambient(ideal: &Ideal, mult: &MultSet) -> Result<()> {
    if ideal.ambient() == mult.ambient() {
        Ok(())
    } else {
        Err(Error::AmbientMismatch)
    }
}

fn proper(ideal: &Ideal) -> Result<()> {
    if ideal.is_unit()? {
        Err(Error::UnitIdeal)
    } else {
        Ok(())
    }
}

/// The elements of S a search ranges over: all of a finite monoid, or the ball.
fn multipliers(mult: &MultSet, bounds: &Bounds) -> Vec<Element> {
    mult.ball(bounds)
}

fn finite_parts(ideal: &Ideal) -> Option<(&FiniteSemiring, ElemSet)> {
    Some((ideal.ambient().as_finite()?, ideal.finite_set()?))
}

fn monoid_of(r: &FiniteSemiring, mult: &MultSet) -> ElemSet {
    mult.finite_set().unwrap_or(ElemSet::singleton(r.one()))
}

/// Generator of a principal natural-number k-ideal (`0` for the zero ideal).
fn nat_principal(ideal: &Ideal) -> Option<u64> {
    match ideal.repr() {
        Repr::Gcd(g) => Some(*g),
        Repr::Plus(sm) if sm.is_zero() => Some(0),
        Repr::Plus(sm) if sm.generators() == [sm.gcd()] => Some(sm.gcd()),
        _ => None,
    }
}

fn classical(ideal: &Ideal, primary: bool, bounds: &Bounds) -> Result<Verdict> {
    proper(ideal)?;
    let t = Tables::build(ideal, &MultSet::trivial(ideal.ambient()), bounds)?;
    Ok(match t.violation(0, primary) {
        Some(p) => {
            let scope = if t.exhaustive { Scope::Exhaustive } else { Scope::Certificate };
            Verdict::disproved(scope, t.pair(p))
        }
        None => {
            let scope = if t.exhaustive { Scope::Exhaustive } else { Scope::Bounded };
            Verdict::proved(scope, Vec::new()).with_bounds(*bounds)
        }
    })
}

/// `ab ∈ I ⇒ a ∈ I or b ∈ I`. A counterexample is a pair `(a, b)`.
pub fn is_prime(ideal: &Ideal, bounds: &Bounds) -> Result<Verdict> {
    classical(ideal, false, bounds)
}

/// `ab ∈ I ⇒ b ∈ I or a ∈ √I`. A counterexample `(a, b)` has `a ∉ √I`, `b ∉ I`.
pub fn is_primary(ideal: &Ideal, bounds: &Bounds) -> Result<Verdict> {
    classical(ideal, true, bounds)
}

fn s_condition(ideal: &Ideal, mult: &MultSet, primary: bool, bounds: &Bounds) -> Result<Verdict> {
    same_ambient(ideal, mult)?;
    let meet = mult.intersects_ideal(ideal, bounds)?;
    if meet.is_proved() {
        return Ok(Verdict::disproved(meet.scope, meet.witness).with_reason("Disjointness"));
    }
    let t = Tables::build(ideal, mult, bounds)?;
    for k in 0..t.ball.len() {
        if t.violation(k, primary).is_none() {
            let scope = if t.exhaustive { Scope::Exhaustive } else { Scope::Bounded };
            return Ok(Verdict::proved(scope, vec![t.ball[k].clone()]).with_bounds(*bounds));
        }
    }
    if let Some(p) = t.uniform_violation(primary) {
        let scope = if t.exhaustive { Scope::Exhaustive } else { Scope::Certificate };
        return Ok(Verdict::disproved(scope, t.pair(p)).with_reason("no element of S repairs this pair"));
    }
    if t.exhaustive {
        let mut triples = Vec::new();
        for k in 0..t.ball.len() {
            let p = t.violation(k, primary).expect("every multiplier failed");
            triples.push(t.ball[k].clone());
            triples.extend(t.pair(p));
        }
        return Ok(Verdict::disproved(Scope::Exhaustive, triples)
            .with_reason("each s fails on its own pair, listed as (s, a, b)"));
    }
    Ok(Verdict::unknown(*bounds).with_reason("no s in the S-ball works and no pair defeats all of S"))
}

/// One `s ∈ S` with `ab ∈ I ⇒ sa ∈ I or sb ∈ I` for all `a, b`.
pub fn is_s_prime(ideal: &Ideal, mult: &MultSet, bounds: &Bounds) -> Result<Verdict> {
    s_condition(ideal, mult, false, bounds)
}

/// One `s ∈ S` with `ab ∈ I ⇒ sb ∈ I or sa ∈ √I` for all `a, b`.
pub fn is_s_primary(ideal: &Ideal, mult: &MultSet, bounds: &Bounds) -> Result<Verdict> {
    s_condition(ideal, mult, true, bounds)
}

/// k-ideal and S-primary.
pub fn is_s_k_primary(ideal: &Ideal, mult: &MultSet, bounds: &Bounds) -> Result<Verdict> {
    same_ambient(ideal, mult)?;
    let k = ideal.is_k_ideal(bounds)?;
    if !k.is_proved() {
        return Ok(k.with_reason("not a k-ideal"));
    }
    let v = is_s_primary(ideal, mult, bounds)?;
    if v.is_proved() {
        let scope = v.scope.max(k.scope);
        return Ok(Verdict { scope, ..v }.with_bounds(*bounds));
    }
    Ok(v)
}

/// `A` is S-k-primary, `P` is S-prime and `√A = P`.
pub fn is_s_p_primary(a: &Ideal, p: &Ideal, mult: &MultSet, bounds: &Bounds) -> Result<Verdict> {
    if a.ambient() != p.ambient() {
        return Err(Error::AmbientMismatch);
    }
    let va = is_s_k_primary(a, mult, bounds)?;
    if !va.is_proved() {
        let reason = format!("A: {}", va.reason.clone().unwrap_or_else(|| "not S-k-primary".into()));
        return Ok(va.with_reason(reason));
    }
    let vp = is_s_prime(p, mult, bounds)?;
    if !vp.is_proved() {
        let reason = format!("P: {}", vp.reason.clone().unwrap_or_else(|| "not S-prime".into()));
        return Ok(vp.with_reason(reason));
    }
    let (equal, scope, witness) = match (finite_parts(a), p.finite_set(), a.repr(), p.repr()) {
        (Some((r, aset)), Some(pset), _, _) => {
            let rad = r.radical(aset);
            let diff = ElemSet(rad.0 ^ pset.0).first();
            (diff.is_none(), Scope::Exhaustive, diff.map(Element::Finite).into_iter().collect())
        }
        (_, _, Repr::Gcd(ga), Repr::Gcd(gp)) => {
            let rad = arith::radical(*ga);
            (rad == *gp, Scope::ClosedForm, vec![Element::nat(rad)])
        }
        (_, _, Repr::Plus(_), Repr::Plus(_)) => {
            let diff = (0..=bounds.elem_bound)
                .find(|&y| nat_radical_contains(a, y as u128) != p.member_u128(y as u128));
            match diff {
                Some(y) => (false, Scope::Certificate, vec![Element::nat(y)]),
                None => (true, Scope::Bounded, Vec::new()),
            }
        }
        _ => return Err(Error::Unsupported(format!("radical comparison over {}", a.ambient().kind()))),
    };
    if !equal {
        return Ok(Verdict::disproved(scope, witness).with_reason("radical of A differs from P"));
    }
    let mut witness = va.witness.clone();
    witness.extend(vp.witness.iter().cloned());
    let scope = scope.max(va.scope).max(vp.scope);
    Ok(Verdict::proved(scope, witness).with_bounds(*bounds))
}

fn require_k_disjoint(ideal: &Ideal, mult: &MultSet, bounds: &Bounds) -> Result<()> {
    same_ambient(ideal, mult)?;
    if !ideal.is_k_ideal(bounds)?.is_proved() {
        return Err(Error::NotKIdeal);
    }
    if mult.intersects_ideal(ideal, bounds)?.is_proved() {
        return Err(Error::NotDisjoint);
    }
    Ok(())
}

/// Whenever `s(I ∩ J) ⊆ A ⊆ I ∩ J` for k-ideals `I, J` and `s ∈ S`, some
/// `s'` gives `ss'I ⊆ A` or `ss'J ⊆ A`. A counterexample is `[s]` with the
/// pair in the reason (finite tables), or `[s, i, j]` for the principal
/// pair `(i), (j)` on natural-number carriers.
pub fn is_s_k_irreducible(a: &Ideal, mult: &MultSet, bounds: &Bounds) -> Result<Verdict> {
    require_k_disjoint(a, mult, bounds)?;
    if let Some((r, aset)) = finite_parts(a) {
        return Ok(finite_irreducible(r, aset, monoid_of(r, mult)));
    }
    match nat_principal(a) {
        Some(d) => nat_irreducible(d, mult, bounds),
        None => Err(Error::Unsupported(format!("S-k-irreducibility over {}", a.ambient().kind()))),
    }
}

fn finite_irreducible(r: &FiniteSemiring, aset: ElemSet, monoid: ElemSet) -> Verdict {
    let kideals: Vec<ElemSet> = r.all_ideals().into_iter().filter(|&i| r.is_k_ideal(i)).collect();
    let svec = monoid.to_vec();
    let mut premises = 0usize;
    for (n, &i) in kideals.iter().enumerate() {
        for &j in &kideals[n..] {
            let meet = i.intersect(j);
            if !aset.is_subset(meet) {
                continue;
            }
            for &s in &svec {
                if !r.scale(s, meet).is_subset(aset) {
                    continue;
                }
                premises += 1;
                let repaired = svec.iter().any(|&t| {
                    let st = r.mul(s, t);
                    r.scale(st, i).is_subset(aset) || r.scale(st, j).is_subset(aset)
                });
                if !repaired {
                    return Verdict::disproved(Scope::Exhaustive, vec![Element::Finite(s)])
                        .with_reason(format!("I = {i}, J = {j}"));
                }
            }
        }
    }
    Verdict::proved(Scope::Exhaustive, Vec::new()).with_reason(format!("{premises} premises checked"))
}

/// Both natural-number carriers have only principal k-ideals `(i)`, and those
/// containing `(d)` are the divisors of `d`. For a fixed pair the premise is
/// satisfiable iff S reaches the primes of `d / lcm(i, j)`, and some `s'`
/// repairs it iff S reaches the primes of `d / i` or of `d / j` (the primes
/// outside S are unaffected by any multiplier).
fn nat_irreducible(d: u64, mult: &MultSet, bounds: &Bounds) -> Result<Verdict> {
    if d == 0 {
        return Ok(Verdict::proved(Scope::ClosedForm, Vec::new())
            .with_reason("zero ideal of a semiring without zero divisors"));
    }
    let divs = arith::divisors(d);
    let mut premises = 0usize;
    for (n, &i) in divs.iter().enumerate() {
        for &j in &divs[n..] {
            let l = arith::lcm(i, j).expect("divides d");
            if !mult.covers_primes_of(d / l)? {
                continue;
            }
            premises += 1;
            if !mult.covers_primes_of(d / i)? && !mult.covers_primes_of(d / j)? {
                let s = mult.element_divisible_by(d / l, bounds)?.expect("covered");
                return Ok(Verdict::disproved(Scope::ClosedForm, vec![s, Element::nat(i), Element::nat(j)]));
            }
        }
    }
    Ok(Verdict::proved(Scope::ClosedForm, Vec::new()).with_reason(format!("{premises} premises checked")))
}

/// One `s` with `sI ⊆ M` for every ideal `I ⊇ M` disjoint from S.
///
/// An ideal escapes `s` exactly when it contains some `x` with `sx ∉ M`,
/// and then so does the smaller ideal generated by `M` and `x`; it is
/// enough to range over those extensions. A counterexample is `[x]` when
/// `x` escapes every `s`, else a list of `(s, x)` pairs.
pub fn is_s_k_maximal(m: &Ideal, mult: &MultSet, bounds: &Bounds) -> Result<Verdict> {
    require_k_disjoint(m, mult, bounds)?;
    if let Some((r, mset)) = finite_parts(m) {
        let monoid = monoid_of(r, mult);
        let escapes: Vec<usize> = (0..r.order())
            .filter(|&x| !mset.contains(x) && r.closure(mset.with(x)).is_disjoint(monoid))
            .collect();
        let svec = monoid.to_vec();
        if let Some(&s) = svec.iter().find(|&&s| escapes.iter().all(|&x| mset.contains(r.mul(s, x)))) {
            return Ok(Verdict::proved(Scope::Exhaustive, vec![Element::Finite(s)]));
        }
        if let Some(&x) = escapes.iter().find(|&&x| svec.iter().all(|&s| !mset.contains(r.mul(s, x)))) {
            return Ok(Verdict::disproved(Scope::Exhaustive, vec![Element::Finite(x)]));
        }
        let mut pairs = Vec::new();
        for &s in &svec {
            let x = escapes.iter().copied().find(|&x| !mset.contains(r.mul(s, x))).expect("s fails");
            pairs.extend([Element::Finite(s), Element::Finite(x)]);
        }
        return Ok(Verdict::disproved(Scope::Exhaustive, pairs).with_reason("no single s, listed as (s, x)"));
    }
    let Some(d) = nat_principal(m) else {
        return Err(Error::Unsupported(format!("S-k-maximality over {}", m.ambient().kind())));
    };
    if d == 0 {
        // Every nonzero x escapes; a prime outside the reach of S gives an
        // extension disjoint from S.
        let p = (2u64..).find(|&p| arith::is_prime(p) && !mult.covers_primes_of(p).unwrap_or(false));
        let p = p.expect("S reaches finitely many primes or only odd ones");
        return Ok(Verdict::disproved(Scope::ClosedForm, vec![Element::nat(p)]));
    }
    // Extensions by x depend on x only through i = gcd(d, x); x = i is a
    // representative, except that i = 1 uses d + 1 in (N0, +, ·) so that
    // the extension need not contain 1.
    let plus = matches!(m.repr(), Repr::Plus(_));
    let mut need = 1u64;
    for i in arith::divisors(d) {
        let x = if plus && i == 1 { d + 1 } else { i };
        let ext = m.sum(&Ideal::new(m.ambient(), &[Element::nat(x)])?)?;
        if mult.intersects_ideal(&ext, bounds)?.is_proved() {
            continue;
        }
        if !mult.covers_primes_of(d / i)? {
            return Ok(Verdict::disproved(Scope::Exhaustive, vec![Element::nat(x)]));
        }
        need = arith::lcm(need, d / i).expect("divides d");
    }
    let s = mult.element_divisible_by(need, bounds)?.expect("covered");
    Ok(Verdict::proved(Scope::Exhaustive, vec![s]))
}

/// Achievable values of `gcd(a, s)` for `s ∈ S`, each with a representative
/// `s`. Uses `gcd(a, st) = gcd(a, gcd(a, s)·t)`.
fn gcd_colon_reps(a: u64, mult: &MultSet, bounds: &Bounds) -> Result<Vec<(u64, Element)>> {
    if mult.kind() == MultKind::Odds {
        return Ok(arith::divisors(a)
            .into_iter()
            .filter(|d| d % 2 == 1)
            .map(|d| (d, Element::nat(d)))
            .collect());
    }
    let gens: Vec<u64> = mult.ball_u64(&Bounds { exp_bound: 1, ..*bounds })
        .into_iter()
        .filter(|&g| g != 1)
        .collect();
    let mut reps: Vec<(u64, BigUint)> = vec![(1, BigUint::from(1u32))];
    let mut i = 0;
    while i < reps.len() {
        let (g, s) = reps[i].clone();
        for &t in &gens {
            let ng = arith::gcd(a, ((g as u128 * t as u128) % a as u128) as u64);
            let ng = if ng == 0 { a } else { ng };
            if !reps.iter().any(|(h, _)| *h == ng) {
                reps.push((ng, &s * t));
            }
        }
        i += 1;
    }
    Ok(reps.into_iter().map(|(g, s)| (g, Element::Nat(s))).collect())
}

/// Some `s ∈ S` with `(A : s)` primary.
pub fn colon_primary_witness(a: &Ideal, mult: &MultSet, bounds: &Bounds) -> Result<Verdict> {
    same_ambient(a, mult)?;
    let mut all_refuted = true;
    let mut scope = Scope::Exhaustive;
    for s in multipliers(mult, bounds) {
        let c = a.colon(&s)?;
        if c.is_unit()? {
            continue;
        }
        let v = is_primary(&c, bounds)?;
        if v.is_proved() {
            return Ok(Verdict::proved(v.scope, vec![s]).with_bounds(*bounds));
        }
        all_refuted &= v.is_disproved();
        scope = scope.max(v.scope);
    }
    if a.finite_set().is_some() {
        return Ok(Verdict::disproved(Scope::Exhaustive, Vec::new()));
    }
    if let Repr::Gcd(g) = a.repr() {
        if *g != 0 {
            // Every colon is (g / gcd(g, s)); try the remaining achievable ones.
            for (h, s) in gcd_colon_reps(*g, mult, bounds)? {
                let c = Ideal::new(a.ambient(), &[Element::nat(g / h)])?;
                if c.is_unit()? {
                    continue;
                }
                let v = is_primary(&c, bounds)?;
                if v.is_proved() {
                    return Ok(Verdict::proved(v.scope, vec![s]).with_bounds(*bounds));
                }
                all_refuted &= v.is_disproved();
                scope = scope.max(v.scope);
            }
            if all_refuted {
                return Ok(Verdict::disproved(scope, Vec::new()).with_reason("every colon by S is refuted"));
            }
        }
    }
    Ok(Verdict::unknown(*bounds).with_reason("no colon by the S-ball is primary"))
}

/// Radical sandwich `r√C ⊆ √A ⊆ √C`, checked memberwise.
fn sandwich(a: &Ideal, c: &Ideal, r: &Element, bounds: &Bounds) -> Result<bool> {
    if let (Some((ring, aset)), Some(cset)) = (finite_parts(a), c.finite_set()) {
        let ra = ring.radical(aset);
        let rc = ring.radical(cset);
        let r = r.as_finite().expect("finite multiplier");
        return Ok(ring.scale(r, rc).is_subset(ra) && ra.is_subset(rc));
    }
    let r = r.as_u64().ok_or_else(|| Error::Overflow(r.to_string()))? as u128;
    Ok((0..=bounds.elem_bound as u128).all(|y| {
        let in_c = nat_radical_contains(c, y);
        let in_a = nat_radical_contains(a, y);
        (!in_c || nat_radical_contains(a, r * y)) && (!in_a || in_c)
    }))
}

/// For an S-k-primary `A` and `x` with `sx ∉ A` for all `s`: every `(A : sx)`
/// is S-k-primary and one `r ∈ S` gives `r√(A:sx) ⊆ √A ⊆ √(A:sx)` for all `s`.
pub fn verify_colon_shift(a: &Ideal, mult: &MultSet, x: &Element, bounds: &Bounds) -> Result<Verdict> {
    same_ambient(a, mult)?;
    let ring = a.ambient();
    let ball = multipliers(mult, bounds);
    let mut colons = Vec::with_capacity(ball.len());
    for s in &ball {
        let sx = ring.mul(s, x)?;
        if a.member(&sx)? {
            return Err(Error::PreconditionFailed(format!("{s}·{x} lies in the ideal")));
        }
        colons.push(a.colon(&sx)?);
    }
    if !is_s_k_primary(a, mult, bounds)?.is_proved() {
        return Err(Error::PreconditionFailed("the ideal is not S-k-primary".into()));
    }
    let mut scope = if a.finite_set().is_some() { Scope::Exhaustive } else { Scope::Bounded };
    for (s, c) in ball.iter().zip(&colons) {
        let v = is_s_k_primary(c, mult, bounds)?;
        match v.status {
            Status::Proved => scope = scope.max(v.scope),
            Status::Disproved => {
                return Ok(Verdict::disproved(v.scope, vec![s.clone()]).with_reason("(A : sx) is not S-k-primary"))
            }
            Status::UnknownUpTo => return Ok(v),
        }
    }
    for r in &ball {
        let mut holds = true;
        for c in &colons {
            if !sandwich(a, c, r, bounds)? {
                holds = false;
                break;
            }
        }
        if holds {
            return Ok(Verdict::proved(scope, vec![r.clone()]).with_bounds(*bounds));
        }
    }
    if a.finite_set().is_some() {
        return Ok(Verdict::disproved(Scope::Exhaustive, Vec::new()).with_reason("no r realizes the sandwich"));
    }
    Ok(Verdict::unknown(*bounds).with_reason("no r in the S-ball realizes the sandwich"))
}

/// Least `k` (1-based), then least `s`, with `s·I_n ⊆ I_k` for every `n ≥ k`.
/// The chain must be ascending. Proofs carry `[k, s]`.
pub fn s_stationary(chain: &[Ideal], mult: &MultSet, bounds: &Bounds) -> Result<Verdict> {
    let Some(first) = chain.first() else {
        return Err(Error::PreconditionFailed("empty chain".into()));
    };
    same_ambient(first, mult)?;
    for w in chain.windows(2) {
        if !w[1].contains_ideal(&w[0])? {
            return Err(Error::PreconditionFailed("the chain is not ascending".into()));
        }
    }
    let ring = first.ambient();
    let ball = multipliers(mult, bounds);
    for k in 0..chain.len() {
        for s in &ball {
            let mut ok = true;
            'outer: for later in &chain[k..] {
                for g in later.generators() {
                    if !chain[k].member(&ring.mul(s, &g)?)? {
                        ok = false;
                        break 'outer;
                    }
                }
            }
            if ok {
                let scope = if first.finite_set().is_some() { Scope::Exhaustive } else { Scope::Certificate };
                return Ok(Verdict::proved(scope, vec![Element::nat(k as u64 + 1), s.clone()]));
            }
        }
    }
    unreachable!("k = len with s = 1 always works")
}

/// Smallest generator subset `J` of `I` and least `s` with `sI ⊆ (J)`.
/// Proofs carry `[s, j1, .., jm]`.
pub fn is_s_finite(ideal: &Ideal, mult: &MultSet, bounds: &Bounds) -> Result<Verdict> {
    same_ambient(ideal, mult)?;
    let ring = ideal.ambient();
    let gens = ideal.generators();
    if gens.len() > 16 {
        return Err(Error::Unsupported(format!("{} generators", gens.len())));
    }
    let ball = multipliers(mult, bounds);
    let scope = if ideal.finite_set().is_some() { Scope::Exhaustive } else { Scope::Certificate };
    for size in 1..=gens.len() {
        let mut masks: Vec<u32> = (0u32..1 << gens.len()).filter(|m| m.count_ones() as usize == size).collect();
        masks.sort_by_key(|&m| (0..gens.len()).filter(|&i| m >> i & 1 == 1).collect::<Vec<_>>());
        for mask in masks {
            let sub: Vec<Element> = (0..gens.len()).filter(|&i| mask >> i & 1 == 1).map(|i| gens[i].clone()).collect();
            let j = Ideal::new(ring, &sub)?;
            for s in &ball {
                let mut ok = true;
                for g in &gens {
                    if !j.member(&ring.mul(s, g)?)? {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    let mut w = vec![s.clone()];
                    w.extend(sub);
                    return Ok(Verdict::proved(scope, w));
                }
            }
        }
    }
    unreachable!("J = I with s = 1 always works")
}

/// One predicate result in a classification report.
#[derive(Debug, Clone, Serialize)]
pub struct ReportEntry {
    pub predicate: &'static str,
    pub status: &'static str,
    pub scope: Scope,
    pub witness: Vec<Element>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub bounds: Bounds,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportError {
    pub predicate: &'static str,
    pub error: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub ideal: Ideal,
    pub mult_set: MultSet,
    pub bounds: Bounds,
    pub results: Vec<ReportEntry>,
    /// Predicates whose preconditions failed or that are not supported here.
    pub errors: Vec<ReportError>,
}

impl ClassificationReport {
    pub fn get(&self, predicate: &str) -> Option<&ReportEntry> {
        self.results.iter().find(|e| e.predicate == predicate)
    }
}

/// Runs every predicate in [`PREDICATES`]; failures are recorded, not raised.
pub fn classify(ideal: &Ideal, mult: &MultSet, bounds: &Bounds) -> Result<ClassificationReport> {
    same_ambient(ideal, mult)?;
    let mut results = Vec::new();
    let mut errors = Vec::new();
    for name in PREDICATES {
        let r = match name {
            "prime" => is_prime(ideal, bounds),
            "primary" => is_primary(ideal, bounds),
            "k" => ideal.is_k_ideal(bounds),
            "s_prime" => is_s_prime(ideal, mult, bounds),
            "s_primary" => is_s_primary(ideal, mult, bounds),
            "s_k_primary" => is_s_k_primary(ideal, mult, bounds),
            "s_k_irreducible" => is_s_k_irreducible(ideal, mult, bounds),
            _ => is_s_k_maximal(ideal, mult, bounds),
        };
        match r {
            Ok(v) => results.push(ReportEntry {
                predicate: name,
                status: v.label(),
                scope: v.scope,
                witness: v.witness,
                reason: v.reason,
                bounds: *bounds,
            }),
            Err(e) => errors.push(ReportError {
                predicate: name,
                error: e.to_string(),
            }),
        }
    }
    Ok(ClassificationReport {
        ideal: ideal.clone(),
        mult_set: mult.clone(),
        bounds: *bounds,
        results,
        errors,
    })
}
