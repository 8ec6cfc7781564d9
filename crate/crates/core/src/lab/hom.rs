//! Semiring homomorphisms between catalog entries, and the colon
//! comparison they induce.

use super::catalog::Entry;
use super::ctx::Ctx;
use super::{Tally, Violation};
use crate::semiring::finite::{ElemSet, FiniteSemiring};

/// Every map `a → b` preserving `+`, `·`, `0` and `1`, as image vectors in
/// lexicographic order. Partial maps are pruned once an operation on assigned
/// arguments has an assigned result with the wrong image.
pub fn homomorphisms(a: &FiniteSemiring, b: &FiniteSemiring) -> Vec<Vec<usize>> {
    let n = a.order();
    let mut out = Vec::new();
    let mut f: Vec<Option<usize>> = vec![None; n];
    extend(a, b, 0, &mut f, &mut out);
    debug_assert!(out.iter().all(|m| m.len() == n));
    out
}

fn consistent(a: &FiniteSemiring, b: &FiniteSemiring, f: &[Option<usize>], x: usize) -> bool {
    let fx = f[x].expect("assigned");
    if (x == a.zero() && fx != b.zero()) || (x == a.one() && fx != b.one()) {
        return false;
    }
    // Results may have been assigned before their arguments, so every
    // assigned pair is rechecked.
    let agrees = |y: usize, z: usize| f[z].is_none_or(|fz| fz == y);
    (0..=x).all(|u| {
        (0..=u).all(|v| {
            let (Some(fu), Some(fv)) = (f[u], f[v]) else { return true };
            agrees(b.add(fu, fv), a.add(u, v)) && agrees(b.mul(fu, fv), a.mul(u, v))
        })
    })
}

fn extend(a: &FiniteSemiring, b: &FiniteSemiring, x: usize, f: &mut Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
    if x == f.len() {
        out.push(f.iter().map(|v| v.expect("complete")).collect());
        return;
    }
    for v in 0..b.order() {
        f[x] = Some(v);
        if consistent(a, b, f, x) {
            extend(a, b, x + 1, f, out);
        }
    }
    f[x] = None;
}

/// The same set, by filtering every map directly.
pub fn homomorphisms_by_filter(a: &FiniteSemiring, b: &FiniteSemiring) -> Vec<Vec<usize>> {
    let (n, m) = (a.order(), b.order());
    let total = m.pow(n as u32);
    (0..total)
        .map(|mut code| {
            let mut f = vec![0; n];
            for slot in f.iter_mut().rev() {
                *slot = code % m;
                code /= m;
            }
            f
        })
        .filter(|f| {
            f[a.zero()] == b.zero()
                && f[a.one()] == b.one()
                && (0..n).all(|x| {
                    (0..n).all(|y| f[a.add(x, y)] == b.add(f[x], f[y]) && f[a.mul(x, y)] == b.mul(f[x], f[y]))
                })
        })
        .collect()
}

fn image(f: &[usize], set: ElemSet) -> ElemSet {
    ElemSet::from_elems(set.iter().map(|x| f[x]))
}

fn preimage(f: &[usize], set: ElemSet) -> ElemSet {
    ElemSet::from_elems((0..f.len()).filter(|&x| set.contains(f[x])))
}

/// Checks every `(f, S, A)` with `f: src → dst` a homomorphism, `S` a
/// multiplicative set of `src` with `0 ∉ f(S)`, and `A` an f(S)-k-primary
/// ideal of `dst`.
pub(super) fn check_pair(src: &Entry, sc: &Ctx, dst: &Entry, dc: &Ctx, t: &mut Tally) {
    let (a, b) = (&src.ring, &dst.ring);
    for f in homomorphisms(a, b) {
        let bijective = a.order() == b.order() && image(&f, sc.full) == dc.full;
        for &s in &sc.mults {
            let fs = image(&f, s);
            if fs.contains(b.zero()) {
                t.skip("f(S) contains zero");
                continue;
            }
            for &q in &dc.kideals {
                if !dc.s_k_primary(q, fs) {
                    t.skip("not f(S)-k-primary");
                    continue;
                }
                let pre = preimage(&f, q);
                let some_k_primary = s.iter().any(|u| {
                    let c = b.colon(q, f[u]);
                    dc.is_k(c) && dc.is_primary(c)
                });
                let bad = s.iter().find(|&u| {
                    let lhs = image(&f, a.colon(pre, u));
                    let rhs = b.colon(q, f[u]);
                    !lhs.is_subset(rhs) || (bijective && lhs != rhs)
                });
                t.check(some_k_primary && bad.is_none(), || Violation {
                    semiring: format!("{} -> {}", src.name, dst.name),
                    mult_set: Some(s.to_string()),
                    detail: match bad {
                        Some(u) => format!("f = {f:?}, A = {q}: colon image fails at s = {u}"),
                        None => format!("f = {f:?}, A = {q}: no (A:f(s)) is k-primary"),
                    },
                    witness: f.clone(),
                });
            }
        }
    }
}
