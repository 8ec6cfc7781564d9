//! Checkers for the statements quantified over a single semiring.

use super::catalog::Entry;
use super::ctx::Ctx;
use super::{HypothesisMode, Tally, TheoremId, Violation};
use crate::semiring::finite::ElemSet;

fn violation(e: &Entry, s: Option<ElemSet>, detail: String, witness: Vec<usize>) -> Violation {
    Violation {
        semiring: e.name.clone(),
        mult_set: s.map(|s| s.to_string()),
        detail,
        witness,
    }
}

/// Structural flags the mode enforces but the entry lacks.
fn missing_flags(e: &Entry, mode: HypothesisMode) -> Vec<&'static str> {
    let f = e.flags;
    let mut out = Vec::new();
    if mode != HypothesisMode::DropAll {
        if !f.additively_cancellative {
            out.push("additively_cancellative");
        }
        if !f.yoked {
            out.push("yoked");
        }
    }
    if mode == HypothesisMode::Strict && !f.zerosumfree {
        out.push("zerosumfree");
    }
    out
}

/// Routes an instance to the checked tally or, when flags are missing, to
/// the informational log.
struct Guard<'a> {
    missing: Vec<&'static str>,
    t: &'a mut Tally,
}

impl Guard<'_> {
    fn record(&mut self, holds: bool, v: impl FnOnce() -> Violation) {
        if self.missing.is_empty() {
            self.t.check(holds, v);
        } else {
            self.t.skip("structure flags");
            let missing = self.missing.join(", ");
            self.t.info(holds, || {
                let mut v = v();
                v.detail = format!("{} (missing {missing})", v.detail);
                v
            });
        }
    }
}

pub(super) fn check(id: TheoremId, e: &Entry, mode: HypothesisMode, t: &mut Tally) {
    let c = Ctx::new(&e.ring);
    match id {
        TheoremId::Intersection => intersection(&c, e, t),
        TheoremId::PrincipalK => principal_k(&c, e, mode, t),
        TheoremId::Irreducible => irreducible(&c, e, mode, t),
        TheoremId::Existence => existence(&c, e, t),
        TheoremId::Corollary => corollary(&c, e, t),
        TheoremId::SradicalPrime => sradical_prime(&c, e, t),
        TheoremId::ColonShift => colon_shift(&c, e, t),
        TheoremId::Lemma6 => lemma6(&c, e, t),
        TheoremId::RemarkSearch => remark_search(&c, e, t),
        TheoremId::Hom => unreachable!("pairs are handled by the hom module"),
    }
}

fn meet(c: &Ctx, sets: impl Iterator<Item = ElemSet>) -> ElemSet {
    sets.fold(c.full, ElemSet::intersect)
}

fn intersection(c: &Ctx, e: &Entry, t: &mut Tally) {
    for &s in &c.mults {
        let primaries: Vec<ElemSet> = c.kideals.iter().copied().filter(|&x| c.s_k_primary(x, s)).collect();
        let mut radicals: Vec<ElemSet> = primaries.iter().map(|&x| c.rad(x)).collect();
        radicals.sort();
        radicals.dedup();
        for p in radicals {
            let family: Vec<ElemSet> = primaries.iter().copied().filter(|&x| c.rad(x) == p).collect();
            if c.s_prime(p, s).is_none() {
                t.skip("radical not S-prime");
                continue;
            }
            if family.len() < 2 {
                t.skip("fewer than two S-k-P-primary ideals");
                continue;
            }
            let holds = |z: ElemSet| c.is_k(z) && c.s_primary(z, s).is_some() && c.rad(z) == p;
            for (i, &x) in family.iter().enumerate() {
                for &y in &family[i + 1..] {
                    let z = x.intersect(y);
                    t.check(holds(z), || {
                        violation(e, Some(s), format!("{x} ∩ {y} = {z} with radical {p}"), z.to_vec())
                    });
                }
            }
            if family.len() > 2 {
                let z = meet(c, family.iter().copied());
                t.check(holds(z), || violation(e, Some(s), format!("whole family meets in {z}"), z.to_vec()));
            }
        }
    }
}

fn principal_k(c: &Ctx, e: &Entry, mode: HypothesisMode, t: &mut Tally) {
    let mut g = Guard {
        missing: missing_flags(e, mode),
        t,
    };
    for a in 0..c.n() {
        let i = c.r.closure(ElemSet::singleton(a));
        g.record(c.is_k(i), || {
            let w = c.r.k_violation(i).map(|(x, y)| vec![a, x, y]).unwrap_or(vec![a]);
            violation(e, None, format!("<{a}> = {i} is not a k-ideal"), w)
        });
    }
}

fn irreducible(c: &Ctx, e: &Entry, mode: HypothesisMode, t: &mut Tally) {
    let mut g = Guard {
        missing: missing_flags(e, mode),
        t,
    };
    for &s in &c.mults {
        for &a in &c.kideals {
            if !a.is_disjoint(s) {
                g.t.skip("meets S");
                continue;
            }
            if !c.s_k_irreducible(a, s) {
                g.t.skip("not S-k-irreducible");
                continue;
            }
            g.record(c.s_k_primary(a, s), || {
                violation(e, Some(s), format!("{a} is S-k-irreducible but not S-k-primary"), a.to_vec())
            });
        }
    }
}

fn existence(c: &Ctx, e: &Entry, t: &mut Tally) {
    for &s in &c.mults {
        let primaries: Vec<ElemSet> = c.kideals.iter().copied().filter(|&x| c.s_k_primary(x, s)).collect();
        for &i in &c.kideals {
            if !i.is_disjoint(s) {
                t.skip("meets S");
                continue;
            }
            // Some subfamily meets in `i` iff the family of all S-k-primary
            // ideals above `i` does.
            let m = meet(c, primaries.iter().copied().filter(|&q| i.is_subset(q)));
            t.check(m == i, || {
                violation(
                    e,
                    Some(s),
                    format!("{i} is not an intersection of S-k-primary ideals; the S-k-primary ideals above it meet in {m}"),
                    i.to_vec(),
                )
            });
        }
    }
}

fn corollary(c: &Ctx, e: &Entry, t: &mut Tally) {
    for &s in &c.mults {
        let primes: Vec<ElemSet> = c.ideals.iter().copied().filter(|&p| c.s_prime(p, s).is_some()).collect();
        for &i in &c.kideals {
            if !i.is_disjoint(s) {
                t.skip("meets S");
                continue;
            }
            if c.rad(i) != i {
                t.skip("not radical");
                continue;
            }
            let m = meet(c, primes.iter().copied().filter(|&p| i.is_subset(p)));
            t.check(m == i, || {
                violation(e, Some(s), format!("the S-prime ideals above {i} meet in {m}"), i.to_vec())
            });
        }
    }
}

fn sradical_prime(c: &Ctx, e: &Entry, t: &mut Tally) {
    for &s in &c.mults {
        for &a in &c.ideals {
            if c.s_primary(a, s).is_none() {
                t.skip("not S-primary");
                continue;
            }
            let q = c.s_radical(a, s);
            t.check(c.is_ideal_set(q) && c.is_prime_set(q), || {
                violation(e, Some(s), format!("S-radical of {a} is {q}, not a prime ideal"), a.to_vec())
            });
        }
    }
}

fn colon_shift(c: &Ctx, e: &Entry, t: &mut Tally) {
    for &s in &c.mults {
        for &a in &c.kideals {
            if !c.s_k_primary(a, s) {
                t.skip("not S-k-primary");
                continue;
            }
            let sat = c.saturation(a, s);
            let rad_a = c.rad(a);
            for x in 0..c.n() {
                if sat.contains(x) {
                    t.skip("some s·x lies in A");
                    continue;
                }
                let colons: Vec<ElemSet> = s.iter().map(|u| c.r.colon(a, c.r.mul(u, x))).collect();
                let primary = colons.iter().all(|&q| c.s_k_primary(q, s));
                let shift = s.iter().find(|&r| {
                    colons.iter().all(|&q| {
                        let rq = c.rad(q);
                        c.r.scale(r, rq).is_subset(rad_a) && rad_a.is_subset(rq)
                    })
                });
                t.check(primary && shift.is_some(), || {
                    let what = if primary { "no uniform r" } else { "a colon is not S-k-primary" };
                    violation(e, Some(s), format!("A = {a}, x = {x}: {what}"), vec![x])
                });
            }
        }
    }
}

fn lemma6(c: &Ctx, e: &Entry, t: &mut Tally) {
    for &s in &c.mults {
        for &a in &c.kideals {
            if !c.s_k_primary(a, s) {
                t.skip("not S-k-primary");
                continue;
            }
            let p = c.rad(a);
            if c.s_prime(p, s).is_none() {
                t.skip("radical not S-prime");
                continue;
            }
            let sa = c.saturation(a, s);
            let sp = c.saturation(p, s);
            let invariants = a.is_subset(sa) && c.saturation(sa, s) == sa;
            let primary = sa != c.full && c.pairs_hold(sa, |x, y| sa.contains(x) || sp.contains(y)) && c.rad(sa) == sp;
            t.check(invariants && primary, || {
                let what = if invariants { "not S(P)-primary" } else { "saturation invariant fails" };
                violation(e, Some(s), format!("A = {a}, S(A) = {sa}, S(P) = {sp}: {what}"), sa.to_vec())
            });
        }
    }
}

fn remark_search(c: &Ctx, e: &Entry, t: &mut Tally) {
    for &s in &c.mults {
        for &a in &c.kideals {
            if !c.s_k_primary(a, s) {
                t.skip("not S-k-primary");
                continue;
            }
            let p = c.rad(a);
            let s_k_prime = c.is_k(p) && c.s_prime(p, s).is_some();
            t.check(true, || violation(e, Some(s), format!("A = {a}"), a.to_vec()));
            t.info(s_k_prime, || {
                violation(e, Some(s), format!("A = {a} is S-k-primary but its radical {p} is not S-k-prime"), a.to_vec())
            });
        }
    }
}
