//! Every refutation the classifier produces is replayed through the raw
//! definitions using only ring operations and ideal membership.

use semideal::classify::{self, ReportEntry};
use semideal::lab::catalog::catalog;
use semideal::lab::{self, LabConfig, ReportStatus, TheoremId};
use semideal::semiring::finite::{ElemSet, FiniteSemiring};
use semideal::{Bounds, Element, Ideal, MultSet, Poly, Semiring, Status};

type Replay = Result<(), String>;

fn need(cond: bool, msg: impl FnOnce() -> String) -> Replay {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

struct Inst<'a> {
    r: &'a Semiring,
    i: &'a Ideal,
    s: &'a MultSet,
    ball: Vec<Element>,
    b: Bounds,
}

impl Inst<'_> {
    fn mul(&self, a: &Element, b: &Element) -> Element {
        self.r.mul(a, b).unwrap()
    }

    fn has(&self, x: &Element) -> bool {
        self.i.member(x).unwrap()
    }

    /// Some power `x^n`, `1 <= n <= rad_bound`, lies in the ideal.
    fn in_rad(&self, x: &Element) -> bool {
        (1..=self.b.rad_bound).any(|n| self.has(&self.r.pow(x, n).unwrap()))
    }

    /// `(a, b)` with `ab ∈ I` that the multiplier `s` does not repair.
    fn defeats(&self, s: &Element, a: &Element, b: &Element, primary: bool) -> bool {
        let sa = self.mul(s, a);
        let sb = self.mul(s, b);
        let a_ok = if primary { self.in_rad(&sa) } else { self.has(&sa) };
        self.has(&self.mul(a, b)) && !self.has(&sb) && !a_ok
    }
}

fn replay(inst: &Inst, e: &ReportEntry) -> Replay {
    let w = &e.witness;
    let one = inst.r.one();
    let tag = || format!("{} {:?} {:?}", e.predicate, w, e.reason);
    match e.predicate {
        "prime" | "primary" => {
            need(w.len() == 2, tag)?;
            need(inst.defeats(&one, &w[0], &w[1], e.predicate == "primary"), tag)
        }
        "k" => {
            need(w.len() == 2, tag)?;
            let sum = inst.r.add(&w[0], &w[1]).unwrap();
            need(inst.has(&w[0]) && inst.has(&sum) && !inst.has(&w[1]), tag)
        }
        "s_prime" | "s_primary" | "s_k_primary" => replay_s(inst, e),
        "s_k_irreducible" => replay_irreducible(inst, e),
        "s_k_maximal" => replay_maximal(inst, e),
        other => Err(format!("no replay for {other}")),
    }
}

fn replay_s(inst: &Inst, e: &ReportEntry) -> Replay {
    let w = &e.witness;
    let tag = || format!("{} {:?} {:?}", e.predicate, w, e.reason);
    let primary = e.predicate != "s_prime";
    match e.reason.as_deref() {
        Some("Disjointness") => {
            need(w.len() == 1, tag)?;
            need(inst.s.contains(&w[0]).unwrap().is_proved() && inst.has(&w[0]), tag)
        }
        Some("not a k-ideal") => {
            let sum = inst.r.add(&w[0], &w[1]).unwrap();
            need(inst.has(&w[0]) && inst.has(&sum) && !inst.has(&w[1]), tag)
        }
        Some("no element of S repairs this pair") => {
            need(w.len() == 2, tag)?;
            need(inst.ball.iter().all(|s| inst.defeats(s, &w[0], &w[1], primary)), tag)
        }
        Some(r) if r.starts_with("each s fails") => {
            need(w.len() == 3 * inst.ball.len(), tag)?;
            for (t, s) in w.chunks(3).zip(&inst.ball) {
                need(t[0] == *s && inst.defeats(s, &t[1], &t[2], primary), tag)?;
            }
            Ok(())
        }
        _ => Err(format!("unexpected refutation: {}", tag())),
    }
}

fn finite_parts<'a>(inst: &Inst<'a>) -> Option<(&'a FiniteSemiring, ElemSet, ElemSet)> {
    let r = inst.r.as_finite()?;
    let s = inst.s.finite_set().unwrap_or(ElemSet::singleton(r.one()));
    Some((r, inst.i.finite_set()?, s))
}

fn finite_k_ideals(r: &FiniteSemiring) -> Vec<ElemSet> {
    let n = r.order();
    (0..1u64 << n)
        .map(ElemSet)
        .filter(|&i| {
            i.contains(r.zero())
                && i.iter().all(|a| i.iter().all(|b| i.contains(r.add(a, b))))
                && i.iter().all(|a| (0..n).all(|x| i.contains(r.mul(x, a))))
                && (0..n).all(|a| (0..n).all(|b| !(i.contains(a) && i.contains(r.add(a, b))) || i.contains(b)))
        })
        .collect()
}

fn scale(r: &FiniteSemiring, s: usize, set: ElemSet) -> ElemSet {
    ElemSet::from_elems(set.iter().map(|x| r.mul(s, x)))
}

fn principal(inst: &Inst, x: &Element) -> Ideal {
    Ideal::new(inst.r, std::slice::from_ref(x)).unwrap()
}

fn replay_irreducible(inst: &Inst, e: &ReportEntry) -> Replay {
    let w = &e.witness;
    let tag = || format!("s_k_irreducible {:?} {:?}", w, e.reason);
    if let Some((r, a, s)) = finite_parts(inst) {
        need(w.len() == 1, tag)?;
        let t = w[0].as_finite().unwrap();
        need(s.contains(t), tag)?;
        let ks = finite_k_ideals(r);
        let defeated = ks.iter().any(|&i| {
            ks.iter().any(|&j| {
                let meet = i.intersect(j);
                a.is_subset(meet)
                    && scale(r, t, meet).is_subset(a)
                    && s.iter().all(|u| {
                        let tu = r.mul(t, u);
                        !scale(r, tu, i).is_subset(a) && !scale(r, tu, j).is_subset(a)
                    })
            })
        });
        return need(defeated, tag);
    }
    // principal pair (i), (j) over a natural-number carrier
    need(w.len() == 3, tag)?;
    let (t, i, j) = (&w[0], &w[1], &w[2]);
    let (iu, ju) = (i.as_u64().unwrap(), j.as_u64().unwrap());
    let l = Element::nat(num_integer::lcm(iu, ju));
    let ii = principal(inst, i);
    let jj = principal(inst, j);
    let contained = inst
        .i
        .generators()
        .iter()
        .all(|g| ii.member(g).unwrap() && jj.member(g).unwrap());
    need(contained, tag)?;
    need(inst.s.contains(t).unwrap().is_proved() && inst.has(&inst.mul(t, &l)), tag)?;
    let unrepaired = inst.ball.iter().all(|u| {
        let tu = inst.mul(t, u);
        !inst.has(&inst.mul(&tu, i)) && !inst.has(&inst.mul(&tu, j))
    });
    need(unrepaired, tag)
}

fn replay_maximal(inst: &Inst, e: &ReportEntry) -> Replay {
    let w = &e.witness;
    let tag = || format!("s_k_maximal {:?} {:?}", w, e.reason);
    if let Some((r, m, s)) = finite_parts(inst) {
        let escapes = |x: usize| !m.contains(x) && r.closure(m.with(x)).is_disjoint(s);
        if w.len() == 1 {
            let x = w[0].as_finite().unwrap();
            return need(escapes(x) && s.iter().all(|t| !m.contains(r.mul(t, x))), tag);
        }
        need(w.len() == 2 * s.len(), tag)?;
        for (p, t) in w.chunks(2).zip(s.iter()) {
            let (u, x) = (p[0].as_finite().unwrap(), p[1].as_finite().unwrap());
            need(u == t && escapes(x) && !m.contains(r.mul(u, x)), tag)?;
        }
        return Ok(());
    }
    need(w.len() == 1, tag)?;
    let x = &w[0];
    let ext = inst.i.sum(&principal(inst, x)).unwrap();
    need(!inst.has(x), tag)?;
    need(inst.ball.iter().all(|t| !ext.member(t).unwrap()), tag)?;
    need(inst.ball.iter().all(|t| !inst.has(&inst.mul(t, x))), tag)
}

fn replay_all(r: &Semiring, i: &Ideal, s: &MultSet, b: Bounds) -> (usize, Vec<String>) {
    let report = classify::classify(i, s, &b).unwrap();
    let inst = Inst {
        r,
        i,
        s,
        ball: s.ball(&b),
        b,
    };
    let mut n = 0;
    let mut failures = Vec::new();
    for e in report.results.iter().filter(|e| e.status == "Disproved") {
        n += 1;
        if let Err(msg) = replay(&inst, e) {
            failures.push(format!("{i:?} wrt {s:?}: {msg}"));
        }
    }
    (n, failures)
}

fn gens_of(r: &FiniteSemiring, set: ElemSet) -> Vec<Element> {
    let mut g = r.canonical_generators(set);
    if g.is_empty() {
        g.push(r.zero());
    }
    g.into_iter().map(Element::Finite).collect()
}

#[test]
fn finite_refutations_replay() {
    let b = Bounds::default();
    let mut total = 0;
    for e in catalog(4).unwrap().into_iter().filter(|e| e.ring.order() > 1) {
        let r = Semiring::from(e.ring.clone());
        for m in e.ring.all_mult_sets() {
            let s = MultSet::new(&r, &m.iter().map(Element::Finite).collect::<Vec<_>>()).unwrap();
            for set in e.ring.all_ideals().into_iter().filter(|i| !i.contains(e.ring.one())) {
                let i = Ideal::new(&r, &gens_of(&e.ring, set)).unwrap();
                let (n, failures) = replay_all(&r, &i, &s, b);
                assert!(failures.is_empty(), "{}: {failures:#?}", e.name);
                total += n;
            }
        }
    }
    assert!(total > 600, "only {total} refutations");
}

#[test]
fn gcd_refutations_replay() {
    let r = Semiring::NatGcdTimes;
    let b = Bounds::default();
    let mut total = 0;
    for gens in [vec![2u64], vec![3], vec![5], vec![6], vec![2, 3]] {
        let s = MultSet::new(&r, &gens.iter().map(|&g| Element::nat(g)).collect::<Vec<_>>()).unwrap();
        for q in 2..=300 {
            let i = Ideal::new(&r, &[Element::nat(q)]).unwrap();
            let (n, failures) = replay_all(&r, &i, &s, b);
            assert!(failures.is_empty(), "{failures:#?}");
            total += n;
        }
    }
    assert!(total > 1000, "only {total} refutations");
}

#[test]
fn plus_and_poly_refutations_replay() {
    let b = Bounds::default().with_elem_bound(60);
    let plus = Semiring::NatPlusTimes;
    let mut total = 0;
    for gens in [vec![4u64, 6], vec![3, 5], vec![6], vec![9], vec![2, 7], vec![10]] {
        let i = Ideal::new(&plus, &gens.iter().map(|&g| Element::nat(g)).collect::<Vec<_>>()).unwrap();
        for sg in [2u64, 3, 5] {
            let s = MultSet::new(&plus, &[Element::nat(sg)]).unwrap();
            let (n, failures) = replay_all(&plus, &i, &s, b);
            assert!(failures.is_empty(), "{failures:#?}");
            total += n;
        }
    }
    let poly = Semiring::NatPoly;
    let i = Ideal::new(&poly, &[Element::Poly(Poly::from_u64s(&[1, 1]))]).unwrap();
    let v = i.is_k_ideal(&Bounds::default()).unwrap();
    assert_eq!(v.status, Status::Disproved);
    let (a, c) = (&v.witness[0], &v.witness[1]);
    let sum = poly.add(a, c).unwrap();
    assert!(i.member(a).unwrap() && i.member(&sum).unwrap() && !i.member(c).unwrap());
    assert!(total > 20, "only {total} refutations");
}

fn parse_set(text: &str) -> ElemSet {
    ElemSet::from_elems(text.split(|c: char| !c.is_ascii_digit()).filter(|t| !t.is_empty()).map(|t| t.parse().unwrap()))
}

/// The order-four counterexamples to the decomposition statement, checked
/// from scratch: `I` is a k-ideal disjoint from S, yet the S-k-primary
/// k-ideals containing it meet in something strictly larger.
#[test]
fn existence_counterexamples_replay() {
    let scope = lab::scope(4, None).unwrap();
    let report = lab::check_theorem(TheoremId::Existence, &scope, &LabConfig::default()).unwrap();
    assert_eq!(report.status, ReportStatus::Violated);
    assert!(!report.violations.is_empty());
    let entries = catalog(4).unwrap();
    for v in &report.violations {
        let r = &entries.iter().find(|e| e.name == v.semiring).unwrap().ring;
        let s = parse_set(v.mult_set.as_deref().unwrap());
        let i = ElemSet::from_elems(v.witness.iter().copied());
        let ks = finite_k_ideals(r);
        assert!(ks.contains(&i) && i.is_disjoint(s));
        let n = r.order();
        let rad = |set: ElemSet| {
            ElemSet::from_elems((0..n).filter(|&x| (1..=n as u32 + 1).any(|k| set.contains(r.pow(x, k)))))
        };
        let s_primary = |q: ElemSet| {
            q.is_disjoint(s)
                && s.iter().any(|t| {
                    (0..n).all(|a| {
                        (0..n).all(|b| {
                            !q.contains(r.mul(a, b)) || q.contains(r.mul(t, b)) || rad(q).contains(r.mul(t, a))
                        })
                    })
                })
        };
        let meet = ks
            .iter()
            .copied()
            .filter(|&q| i.is_subset(q) && s_primary(q))
            .fold(r.elements(), ElemSet::intersect);
        assert_ne!(meet, i, "{}: {}", v.semiring, v.detail);
    }
}
