//! Per-semiring tables of ideals and multiplicative sets, with the
//! definitional predicates evaluated directly on bitsets.

use crate::semiring::finite::{ElemSet, FiniteSemiring};

pub struct Ctx<'a> {
    pub r: &'a FiniteSemiring,
    pub full: ElemSet,
    pub ideals: Vec<ElemSet>,
    pub kideals: Vec<ElemSet>,
    pub mults: Vec<ElemSet>,
}

impl<'a> Ctx<'a> {
    pub fn new(r: &'a FiniteSemiring) -> Ctx<'a> {
        let ideals = enumerate_ideals(r);
        let kideals = ideals.iter().copied().filter(|&i| r.is_k_ideal(i)).collect();
        Ctx {
            r,
            full: r.elements(),
            kideals,
            mults: r.all_mult_sets(),
            ideals,
        }
    }

    pub fn n(&self) -> usize {
        self.r.order()
    }

    pub fn rad(&self, i: ElemSet) -> ElemSet {
        self.r.radical(i)
    }

    pub fn is_k(&self, i: ElemSet) -> bool {
        self.r.is_k_ideal(i)
    }

    pub(crate) fn pairs_hold(&self, i: ElemSet, ok: impl Fn(usize, usize) -> bool) -> bool {
        let n = self.n();
        (0..n).all(|a| (0..n).all(|b| !i.contains(self.r.mul(a, b)) || ok(a, b)))
    }

    /// Least `s ∈ S` witnessing S-primeness, when `i` is disjoint from `S`.
    pub fn s_prime(&self, i: ElemSet, s: ElemSet) -> Option<usize> {
        if !i.is_disjoint(s) {
            return None;
        }
        let r = self.r;
        s.iter().find(|&t| self.pairs_hold(i, |a, b| i.contains(r.mul(t, a)) || i.contains(r.mul(t, b))))
    }

    /// Least `s ∈ S` witnessing S-primaryness, when `i` is disjoint from `S`.
    pub fn s_primary(&self, i: ElemSet, s: ElemSet) -> Option<usize> {
        if !i.is_disjoint(s) {
            return None;
        }
        let r = self.r;
        let rad = self.rad(i);
        s.iter().find(|&t| self.pairs_hold(i, |a, b| rad.contains(r.mul(t, a)) || i.contains(r.mul(t, b))))
    }

    pub fn unit_set(&self) -> ElemSet {
        ElemSet::singleton(self.r.one())
    }

    pub fn is_prime(&self, i: ElemSet) -> bool {
        self.s_prime(i, self.unit_set()).is_some()
    }

    pub fn is_primary(&self, i: ElemSet) -> bool {
        self.s_primary(i, self.unit_set()).is_some()
    }

    pub fn s_k_primary(&self, i: ElemSet, s: ElemSet) -> bool {
        self.is_k(i) && self.s_primary(i, s).is_some()
    }

    /// Definition quantified over all pairs of k-ideals and all `s ∈ S`.
    pub fn s_k_irreducible(&self, a: ElemSet, s: ElemSet) -> bool {
        let r = self.r;
        let sv = s.to_vec();
        for (n, &i) in self.kideals.iter().enumerate() {
            for &j in &self.kideals[n..] {
                let meet = i.intersect(j);
                if !a.is_subset(meet) {
                    continue;
                }
                for &t in &sv {
                    if !r.scale(t, meet).is_subset(a) {
                        continue;
                    }
                    let repaired = sv.iter().any(|&u| {
                        let tu = r.mul(t, u);
                        r.scale(tu, i).is_subset(a) || r.scale(tu, j).is_subset(a)
                    });
                    if !repaired {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn saturation(&self, i: ElemSet, s: ElemSet) -> ElemSet {
        self.r.saturation(i, s)
    }

    pub fn s_radical(&self, i: ElemSet, s: ElemSet) -> ElemSet {
        self.r.s_radical(i, s)
    }

    /// Ideal axioms checked directly, without closure.
    pub fn is_ideal_set(&self, i: ElemSet) -> bool {
        let r = self.r;
        i.contains(r.zero())
            && i.iter().all(|a| i.iter().all(|b| i.contains(r.add(a, b))))
            && i.iter().all(|a| (0..self.n()).all(|x| i.contains(r.mul(x, a))))
    }

    /// Prime condition for an arbitrary subset: proper, and `ab ∈ i` forces `a ∈ i` or `b ∈ i`.
    pub fn is_prime_set(&self, i: ElemSet) -> bool {
        i != self.full && self.pairs_hold(i, |a, b| i.contains(a) || i.contains(b))
    }
}

/// Closures of every generator subset, deduplicated, in ascending bitmask order.
pub fn enumerate_ideals(r: &FiniteSemiring) -> Vec<ElemSet> {
    r.all_ideals()
}

pub fn enumerate_k_ideals(r: &FiniteSemiring) -> Vec<ElemSet> {
    r.all_ideals().into_iter().filter(|&i| r.is_k_ideal(i)).collect()
}

pub fn enumerate_mult_sets(r: &FiniteSemiring) -> Vec<ElemSet> {
    r.all_mult_sets()
}
