//! Invariants checked against independent oracles: exhaustively over the
//! small finite catalog, and by sampling on the natural-number carriers.

use proptest::prelude::*;

use semideal::classify;
use semideal::lab::catalog::{catalog, Entry};
use semideal::lab::hom::homomorphisms;
use semideal::lab::{self, HypothesisMode, LabConfig, Mutation, TheoremId};
use semideal::pisd;
use semideal::semiring::finite::{ElemSet, FiniteSemiring};
use semideal::{Bounds, Element, Ideal, MultSet, Semiring, Status};

fn nat(x: u64) -> Element {
    Element::nat(x)
}

fn gcd_ideal(g: u64) -> Ideal {
    Ideal::new(&Semiring::NatGcdTimes, &[nat(g)]).unwrap()
}

fn gcd_mult(gens: &[u64]) -> MultSet {
    MultSet::new(&Semiring::NatGcdTimes, &gens.iter().map(|&g| nat(g)).collect::<Vec<_>>()).unwrap()
}

fn euclid(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        euclid(b, a % b)
    }
}

fn primes_of(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn ball(gens: &[u64], exp: u32) -> Vec<u128> {
    let mut out = vec![1u128];
    for &g in gens {
        let mut next = Vec::new();
        for &x in &out {
            let mut p = x;
            for _ in 0..=exp {
                next.push(p);
                p *= g as u128;
            }
        }
        out = next;
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn small_catalog(order: usize) -> Vec<Entry> {
    catalog(order).unwrap()
}

fn finite_ideal(sr: &Semiring, r: &FiniteSemiring, set: ElemSet) -> Ideal {
    let mut gens = r.canonical_generators(set);
    if gens.is_empty() {
        gens.push(r.zero());
    }
    let gens: Vec<Element> = gens.into_iter().map(Element::Finite).collect();
    Ideal::new(sr, &gens).unwrap()
}

fn finite_mult(sr: &Semiring, set: ElemSet) -> MultSet {
    let gens: Vec<Element> = set.iter().map(Element::Finite).collect();
    MultSet::new(sr, &gens).unwrap()
}

fn subsets(n: usize) -> impl Iterator<Item = ElemSet> {
    (0..1u64 << n).map(ElemSet)
}

// semiring-core

#[test]
fn catalog_entries_satisfy_the_axioms() {
    for e in small_catalog(4) {
        let r = &e.ring;
        let n = r.order();
        let (z, o) = (r.zero(), r.one());
        for a in 0..n {
            assert_eq!(r.add(a, z), a, "{}", e.name);
            assert_eq!(r.mul(a, o), a, "{}", e.name);
            assert_eq!(r.mul(a, z), z, "{}", e.name);
            for b in 0..n {
                assert_eq!(r.add(a, b), r.add(b, a), "{}", e.name);
                assert_eq!(r.mul(a, b), r.mul(b, a), "{}", e.name);
                for c in 0..n {
                    assert_eq!(r.add(r.add(a, b), c), r.add(a, r.add(b, c)), "{}", e.name);
                    assert_eq!(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)), "{}", e.name);
                    assert_eq!(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)), "{}", e.name);
                }
            }
        }
    }
}

#[test]
fn structure_flags_match_direct_evaluation() {
    let mut entries = small_catalog(4);
    entries.extend(lab::catalog::named().unwrap());
    for e in entries {
        let r = &e.ring;
        let n = r.order();
        let all = |f: &dyn Fn(usize, usize) -> bool| (0..n).all(|a| (0..n).all(|b| f(a, b)));
        let cancellative = (0..n).all(|c| all(&|a, b| r.add(a, c) != r.add(b, c) || a == b));
        let zsf = all(&|a, b| r.add(a, b) != r.zero() || (a == r.zero() && b == r.zero()));
        let yoked = all(&|a, b| (0..n).any(|x| r.add(a, x) == b || r.add(b, x) == a));
        let f = r.structure_flags();
        assert!(r.order() <= 6);
        assert_eq!(f.additively_cancellative, cancellative, "{}", e.name);
        assert_eq!(f.zerosumfree, zsf, "{}", e.name);
        assert_eq!(f.yoked, yoked, "{}", e.name);
        assert_eq!(e.flags, f, "{}", e.name);
    }
}

#[test]
fn text_block_round_trips() {
    for e in small_catalog(4) {
        let back = FiniteSemiring::from_text(&e.ring.to_text()).unwrap();
        assert_eq!(back, e.ring, "{}", e.name);
    }
}

proptest! {
    #[test]
    fn gcd_addition_is_idempotent(a in 0u64..1_000_000) {
        let r = Semiring::NatGcdTimes;
        prop_assert_eq!(r.add(&nat(a), &nat(a)).unwrap(), nat(a));
    }
}

// ideal-algebra

#[test]
fn k_closure_on_every_small_finite_ideal() {
    let b = Bounds::default();
    for e in small_catalog(4) {
        let sr = Semiring::from(e.ring.clone());
        for set in e.ring.all_ideals() {
            let i = finite_ideal(&sr, &e.ring, set);
            let k = i.k_closure().unwrap();
            assert!(k.contains_ideal(&i).unwrap(), "{} {set}", e.name);
            assert!(k.k_closure().unwrap().equals(&k).unwrap(), "{} {set}", e.name);
            let is_k = i.is_k_ideal(&b).unwrap();
            assert_eq!(is_k.is_proved(), k.equals(&i).unwrap(), "{} {set}", e.name);
        }
    }
}

#[test]
fn finite_colon_matches_filtration() {
    for e in small_catalog(3) {
        let r = &e.ring;
        let sr = Semiring::from(r.clone());
        for set in r.all_ideals() {
            let i = finite_ideal(&sr, r, set);
            for s in 0..r.order() {
                let c = i.colon(&Element::Finite(s)).unwrap();
                for x in 0..r.order() {
                    let direct = set.contains(r.mul(s, x));
                    assert_eq!(c.member(&Element::Finite(x)).unwrap(), direct, "{} {set} {s} {x}", e.name);
                }
            }
        }
    }
}

#[test]
fn gcd_ideals_are_k_ideals() {
    let b = Bounds::default().with_elem_bound(500);
    for g in 0..=500 {
        assert_eq!(gcd_ideal(g).is_k_ideal(&b).unwrap().status, Status::Proved, "({g})");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn gcd_colon_membership(a in 0u64..400, s in 0u64..400, x in 0u64..400) {
        let i = gcd_ideal(a);
        let c = i.colon(&nat(s)).unwrap();
        prop_assert_eq!(c.member(&nat(x)).unwrap(), i.member(&nat(s * x)).unwrap());
    }

    #[test]
    fn plus_colon_membership(g1 in 1u64..12, g2 in 1u64..12, s in 0u64..8) {
        let r = Semiring::NatPlusTimes;
        let i = Ideal::new(&r, &[nat(g1), nat(g2)]).unwrap();
        let c = i.colon(&nat(s)).unwrap();
        for x in 0..60 {
            prop_assert_eq!(c.member(&nat(x)).unwrap(), i.member(&nat(s * x)).unwrap(), "x = {}", x);
        }
    }

    #[test]
    fn gcd_intersection_is_the_common_multiples(a in 0u64..60, b in 0u64..60) {
        let m = gcd_ideal(a).intersect(&gcd_ideal(b)).unwrap();
        let divides = |d: u64, x: u64| if d == 0 { x == 0 } else { x.is_multiple_of(d) };
        for x in 0..=500 {
            prop_assert_eq!(m.member(&nat(x)).unwrap(), divides(a, x) && divides(b, x), "x = {}", x);
        }
    }

    #[test]
    fn radicals_grow(a in 1u64..300, x in 0u64..300, gen in prop::sample::select(vec![2u64, 3, 5, 6, 10])) {
        let b = Bounds::default();
        let i = gcd_ideal(a);
        let s = gcd_mult(&[gen]);
        let in_i = i.member(&nat(x)).unwrap();
        let in_rad = i.radical_member(&nat(x), b.rad_bound).unwrap().is_proved();
        let in_srad = i.s_radical_member(&s, &nat(x), &b).unwrap().is_proved();
        prop_assert!(!in_i || in_rad);
        prop_assert!(!in_rad || in_srad);
        let rad = i.radical().unwrap();
        prop_assert_eq!(rad.member(&nat(x)).unwrap(), in_rad);
    }
}

// multiplicative-sets

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn mult_sets_are_closed(gens in prop::collection::vec(2u64..30, 1..3), e1 in 0u32..4, e2 in 0u32..4, k in 0usize..3) {
        let s = gcd_mult(&gens);
        let a = gens[0].pow(e1);
        let b = gens[k % gens.len()].pow(e2);
        prop_assert!(s.contains(&nat(a)).unwrap().is_proved());
        prop_assert!(s.contains(&nat(b)).unwrap().is_proved());
        prop_assert!(s.contains(&nat(a * b)).unwrap().is_proved());
    }
}

#[test]
fn gcd_meets_principal_ideal_iff_support_covers() {
    let b = Bounds::default();
    for gens in [vec![2u64], vec![3], vec![6], vec![2, 5], vec![4, 9]] {
        let s = gcd_mult(&gens);
        let support: Vec<u64> = gens.iter().flat_map(|&g| primes_of(g)).collect();
        let sball = ball(&gens, 8);
        for v in 1..=300u64 {
            let meet = s.intersects_ideal(&gcd_ideal(v), &b).unwrap();
            let covered = primes_of(v).iter().all(|p| support.contains(p));
            let searched = sball.iter().any(|&t| t % v as u128 == 0);
            assert_eq!(meet.is_proved(), covered, "{gens:?} ({v})");
            assert_eq!(covered, searched, "{gens:?} ({v})");
            if meet.is_disproved() {
                for t in s.ball_u64(&b) {
                    assert!(!gcd_ideal(v).member(&nat(t)).unwrap());
                }
            }
        }
    }
}

#[test]
fn finite_disjointness_holds_on_the_ball() {
    let b = Bounds::default();
    for e in small_catalog(3) {
        let r = &e.ring;
        let sr = Semiring::from(r.clone());
        for m in r.all_mult_sets() {
            let s = finite_mult(&sr, m);
            for set in r.all_ideals() {
                let v = s.intersects_ideal(&finite_ideal(&sr, r, set), &b).unwrap();
                assert_eq!(v.is_disproved(), m.is_disjoint(set), "{} {m} {set}", e.name);
                if v.is_disproved() {
                    for t in s.ball(&b) {
                        assert!(!set.contains(t.as_finite().unwrap()));
                    }
                }
            }
        }
    }
}

// classify

#[test]
fn s_primary_iff_some_colon_is_primary() {
    let b = Bounds::default();
    for gen in [2u64, 3, 6] {
        let s = gcd_mult(&[gen]);
        for q in 1..=300 {
            let i = gcd_ideal(q);
            let direct = classify::is_s_primary(&i, &s, &b).unwrap();
            if s.intersects_ideal(&i, &b).unwrap().is_proved() {
                // outside the disjoint setting the colon criterion says nothing
                assert_eq!(direct.reason.as_deref(), Some("Disjointness"), "({q}) wrt <{gen}>");
                continue;
            }
            let colon = classify::colon_primary_witness(&i, &s, &b).unwrap();
            assert_eq!(direct.is_proved(), colon.is_proved(), "({q}) wrt <{gen}>");
        }
    }
}

/// Definitional finite checks, written out independently of the library.
fn radical_of(r: &FiniteSemiring, set: ElemSet) -> ElemSet {
    ElemSet::from_elems((0..r.order()).filter(|&x| (1..=r.order() as u32 + 1).any(|k| set.contains(r.pow(x, k)))))
}

fn s_works(r: &FiniteSemiring, set: ElemSet, s: usize, primary: bool) -> bool {
    let rad = radical_of(r, set);
    let n = r.order();
    (0..n).all(|a| {
        (0..n).all(|b| {
            !set.contains(r.mul(a, b))
                || set.contains(r.mul(s, b))
                || if primary { rad.contains(r.mul(s, a)) } else { set.contains(r.mul(s, a)) }
        })
    })
}

#[test]
fn the_s_prime_witness_serves_for_s_primary() {
    let b = Bounds::default();
    for e in small_catalog(4) {
        let r = &e.ring;
        let sr = Semiring::from(r.clone());
        for m in r.all_mult_sets() {
            let s = finite_mult(&sr, m);
            for set in r.all_ideals() {
                let i = finite_ideal(&sr, r, set);
                let p = classify::is_s_prime(&i, &s, &b).unwrap();
                if !p.is_proved() {
                    continue;
                }
                assert!(classify::is_s_primary(&i, &s, &b).unwrap().is_proved(), "{} {set} {m}", e.name);
                let w = p.witness[0].as_finite().unwrap();
                assert!(m.contains(w));
                assert!(s_works(r, set, w, false));
                assert!(s_works(r, set, w, true), "{} {set} {m} s = {w}", e.name);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn gcd_s_prime_implies_s_primary(q in 0u64..2000, gen in prop::sample::select(vec![2u64, 3, 5, 6, 10, 12])) {
        let b = Bounds::default();
        let i = gcd_ideal(q);
        let s = gcd_mult(&[gen]);
        let p = classify::is_s_prime(&i, &s, &b).unwrap();
        if p.is_proved() {
            let w = p.witness[0].as_u64().unwrap();
            prop_assert!(classify::is_s_primary(&i, &s, &b).unwrap().is_proved());
            // (q : w) is prime, so it is primary, so w serves for S-primary too
            let c = i.colon(&nat(w)).unwrap();
            let g = c.gcd_generator().unwrap();
            prop_assert!(g == 0 || g == 1 || primes_of(g).len() == 1 && primes_of(g)[0] == g);
        }
    }
}

#[test]
fn trivial_mult_set_reduces_to_the_classical_notions() {
    let b = Bounds::default();
    for e in small_catalog(4).into_iter().filter(|e| e.ring.order() > 1) {
        let r = &e.ring;
        let sr = Semiring::from(r.clone());
        let one = MultSet::trivial(&sr);
        for set in r.all_ideals().into_iter().filter(|s| !s.contains(r.one())) {
            let i = finite_ideal(&sr, r, set);
            let sp = classify::is_s_prime(&i, &one, &b).unwrap().is_proved();
            let spr = classify::is_s_primary(&i, &one, &b).unwrap().is_proved();
            assert_eq!(sp, classify::is_prime(&i, &b).unwrap().is_proved(), "{} {set}", e.name);
            assert_eq!(spr, classify::is_primary(&i, &b).unwrap().is_proved(), "{} {set}", e.name);
            assert_eq!(sp, s_works(r, set, r.one(), false), "{} {set}", e.name);
            assert_eq!(spr, s_works(r, set, r.one(), true), "{} {set}", e.name);
        }
    }
}

// pisd-engine

#[test]
fn form_matches_classification() {
    let b = Bounds::default().with_elem_bound(400).with_rad_bound(16);
    for gen in [2u64, 3, 5, 6] {
        let s = gcd_mult(&[gen]);
        for q in 2..=1000u64 {
            let form = pisd::s_primary_form(q, &s).unwrap();
            let v = classify::is_s_primary(&gcd_ideal(q), &s, &b).unwrap();
            assert_eq!(form.is_some(), v.is_proved(), "({q}) wrt <{gen}>");
        }
    }
}

#[test]
fn contraction_matches_the_ball() {
    for gen in [2u64, 3, 6] {
        let s = gcd_mult(&[gen]);
        let sball = ball(&[gen], 8);
        for b in 1..=300u64 {
            let c = pisd::contraction(b, &s).unwrap();
            for x in 0..=300u64 {
                let direct = sball.iter().any(|&t| (t * x as u128).is_multiple_of(b as u128));
                assert_eq!(x % c == 0, direct, "({b}) wrt <{gen}>, x = {x}");
            }
        }
    }
}

#[test]
fn closed_s_radical_matches_membership_search() {
    let bounds = Bounds::default();
    for gen in [2u64, 3, 6] {
        let s = gcd_mult(&[gen]);
        let sball = ball(&[gen], 8);
        for a in 1..=300u64 {
            let g = pisd::s_radical_closed(a, &s).unwrap();
            let i = gcd_ideal(a);
            for x in (0..=300u64).step_by(7).chain([1, 2, 3, 5, 30, 210]) {
                let member = i.s_radical_member(&s, &nat(x), &bounds).unwrap();
                assert_ne!(member.status, Status::UnknownUpTo, "({a}) wrt <{gen}>, x = {x}");
                assert_eq!(x % g == 0, member.is_proved(), "({a}) wrt <{gen}>, x = {x}");
                let direct = sball
                    .iter()
                    .any(|&t| (1..=8u32).any(|n| (t * (x as u128).pow(n)) % a as u128 == 0));
                assert_eq!(x % g == 0, direct, "({a}) wrt <{gen}>, x = {x}");
            }
        }
    }
}

#[test]
fn every_form_has_a_prime_maximal_radical() {
    let b = Bounds::default();
    for gen in [2u64, 3, 5, 6] {
        let s = gcd_mult(&[gen]);
        for q in 2..=500u64 {
            let Some(form) = pisd::s_primary_form(q, &s).unwrap() else { continue };
            assert_eq!(form.generator(), q);
            let rad = pisd::s_radical_closed(q, &s).unwrap();
            assert!(rad == 1 || primes_of(rad) == vec![rad], "({q}) wrt <{gen}>: radical {rad}");
            if rad > 1 {
                assert_eq!(rad, form.p);
                assert!(pisd::radical_is_s_maximal(q, &s, &b).unwrap().is_proved(), "({q}) wrt <{gen}>");
            }
        }
    }
}

#[test]
fn associated_primes_are_the_component_radicals() {
    for gen in [2u64, 3, 6] {
        let s = gcd_mult(&[gen]);
        for a in 2..=500u64 {
            let Ok(d) = pisd::s_primary_decompose(a, &s) else {
                assert!(primes_of(a).iter().all(|p| primes_of(gen).contains(p)));
                continue;
            };
            let via_colon = pisd::associated_primes_via_colon(a, &s).unwrap();
            assert_eq!(via_colon, d.associated_primes, "({a}) wrt <{gen}>");
            let mut rads: Vec<u64> = d.components.iter().map(|c| pisd::s_radical_closed(c.generator, &s).unwrap()).collect();
            rads.sort_unstable();
            rads.dedup();
            assert_eq!(via_colon, rads, "({a}) wrt <{gen}>");
            let lcm = d.components.iter().fold(1u64, |l, c| l / euclid(l, c.generator) * c.generator);
            assert_eq!(lcm, a, "({a}) wrt <{gen}>");
        }
    }
}

// finite-lab

#[test]
fn enumeration_matches_axiom_filter() {
    for e in small_catalog(3) {
        let r = &e.ring;
        let n = r.order();
        let ideals: Vec<ElemSet> = subsets(n)
            .filter(|&i| {
                i.contains(r.zero())
                    && i.iter().all(|a| i.iter().all(|b| i.contains(r.add(a, b))))
                    && i.iter().all(|a| (0..n).all(|x| i.contains(r.mul(x, a))))
            })
            .collect();
        assert_eq!(lab::ctx::enumerate_ideals(r), ideals, "{}", e.name);
        let k: Vec<ElemSet> = ideals
            .iter()
            .copied()
            .filter(|&i| (0..n).all(|a| (0..n).all(|b| !(i.contains(a) && i.contains(r.add(a, b))) || i.contains(b))))
            .collect();
        assert_eq!(lab::ctx::enumerate_k_ideals(r), k, "{}", e.name);
        let mults: Vec<ElemSet> = subsets(n)
            .filter(|&m| {
                m.contains(r.one()) && !m.contains(r.zero()) && m.iter().all(|a| m.iter().all(|b| m.contains(r.mul(a, b))))
            })
            .collect();
        assert_eq!(lab::ctx::enumerate_mult_sets(r), mults, "{}", e.name);
    }
}

#[test]
fn order_six_ideal_counts() {
    for e in lab::catalog::named().unwrap().into_iter().filter(|e| e.ring.order() == 6) {
        let r = &e.ring;
        let n = r.order();
        let count = subsets(n)
            .filter(|&i| {
                i.contains(r.zero())
                    && i.iter().all(|a| i.iter().all(|b| i.contains(r.add(a, b))))
                    && i.iter().all(|a| (0..n).all(|x| i.contains(r.mul(x, a))))
            })
            .count();
        assert_eq!(lab::ctx::enumerate_ideals(r).len(), count, "{}", e.name);
    }
}

#[test]
fn saturation_is_a_closure() {
    for e in small_catalog(4) {
        let ctx = lab::ctx::Ctx::new(&e.ring);
        for &m in &ctx.mults {
            for &i in &ctx.ideals {
                let sat = ctx.saturation(i, m);
                assert!(i.is_subset(sat), "{} {i} {m}", e.name);
                assert_eq!(ctx.saturation(sat, m), sat, "{} {i} {m}", e.name);
                let direct = ElemSet::from_elems((0..e.ring.order()).filter(|&x| m.iter().any(|s| i.contains(e.ring.mul(s, x)))));
                assert_eq!(sat, direct, "{} {i} {m}", e.name);
            }
        }
    }
}

#[test]
fn homomorphisms_preserve_everything() {
    let entries = small_catalog(3);
    for a in &entries {
        for b in &entries {
            let (ra, rb) = (&a.ring, &b.ring);
            let n = ra.order();
            let mut expected = Vec::new();
            let mut f = vec![0usize; n];
            loop {
                let ok = f[ra.zero()] == rb.zero()
                    && f[ra.one()] == rb.one()
                    && (0..n).all(|x| {
                        (0..n).all(|y| f[ra.add(x, y)] == rb.add(f[x], f[y]) && f[ra.mul(x, y)] == rb.mul(f[x], f[y]))
                    });
                if ok {
                    expected.push(f.clone());
                }
                let mut k = 0;
                while k < n && f[k] + 1 == rb.order() {
                    f[k] = 0;
                    k += 1;
                }
                if k == n {
                    break;
                }
                f[k] += 1;
            }
            let mut got = homomorphisms(ra, rb);
            got.sort();
            expected.sort();
            assert_eq!(got, expected, "{} -> {}", a.name, b.name);
        }
    }
}

#[test]
fn every_checker_trips_under_mutation() {
    let scope = lab::scope(3, None).unwrap();
    for id in TheoremId::ALL.into_iter().filter(|id| !id.informational_only()) {
        let mode = if id == TheoremId::Irreducible { HypothesisMode::DropAll } else { HypothesisMode::Strict };
        let cfg = LabConfig {
            mutation: Mutation::NegateConclusion,
            mode,
            ..LabConfig::default()
        };
        let report = lab::check_theorem(id, &scope, &cfg).unwrap();
        assert!(report.instances_checked > 0, "{}", id.name());
        assert!(!report.passed(), "{} survived its mutant", id.name());
    }
}
