//! Factorization-based algorithms for `(N0, gcd, ·)`.
//!
//! Ideals are identified with their generator, and `(x) ⊆ (y)` iff `y | x`.
//! For a finitely generated `S`, `P_S` is the set of primes dividing some
//! generator. A nonzero proper `(q)` is S-primary iff exactly one prime of
//! `q` lies outside `P_S`.

use serde::Serialize;

use crate::arith::{self, Factorization};
use crate::classify;
use crate::config::Bounds;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::multset::MultSet;
use crate::semiring::{Element, Semiring, SemiringKind};
use crate::verdict::Verdict;

/// `(v·p^n)` with `p ∉ P_S` and every prime of `v` in `P_S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SPrimaryForm {
    pub v: u64,
    pub p: u64,
    pub n: u32,
}

impl SPrimaryForm {
    pub fn generator(&self) -> u64 {
        self.v * self.p.pow(self.n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub generator: u64,
    pub form: SPrimaryForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Minimality {
    /// Contracted radicals are pairwise distinct.
    pub distinct_radicals: bool,
    /// No contracted component lies inside another.
    pub non_inclusion: bool,
    /// No contracted component contains the intersection of the others.
    pub irredundant: bool,
}

impl Minimality {
    pub fn holds(&self) -> bool {
        self.distinct_radicals && self.non_inclusion && self.irredundant
    }
}

#[derive(Debug, Clone)]
pub struct Decomposition {
    pub input: u64,
    pub mult: MultSet,
    pub components: Vec<Component>,
    /// Generators of the contracted component radicals, ascending.
    pub associated_primes: Vec<u64>,
    pub minimality: Minimality,
    pub minimal: bool,
}

impl Decomposition {
    /// lcm of the component generators.
    pub fn reconstruct(&self) -> Option<u64> {
        self.components
            .iter()
            .try_fold(1u64, |acc, c| arith::lcm(acc, c.generator))
    }

    pub fn component_ideals(&self) -> Vec<Ideal> {
        self.components.iter().map(|c| Ideal::gcd_ideal(c.generator)).collect()
    }
}

impl Serialize for Decomposition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;

        #[derive(Serialize)]
        struct Comp {
            generator: u64,
            v: u64,
            p: u64,
            n: u32,
        }
        let comps: Vec<Comp> = self
            .components
            .iter()
            .map(|c| Comp {
                generator: c.generator,
                v: c.form.v,
                p: c.form.p,
                n: c.form.n,
            })
            .collect();
        let mut st = s.serialize_struct("Decomposition", 5)?;
        st.serialize_field("input", &self.input)?;
        st.serialize_field("S", self.mult.generators())?;
        st.serialize_field("components", &comps)?;
        st.serialize_field("associated_primes", &self.associated_primes)?;
        st.serialize_field("minimal", &self.minimal)?;
        st.end()
    }
}

fn check_gcd(mult: &MultSet) -> Result<Vec<u64>> {
    if *mult.ambient() != Semiring::NatGcdTimes {
        return Err(Error::KindMismatch {
            expected: SemiringKind::NatGcdTimes,
            found: match mult.ambient().kind() {
                SemiringKind::FiniteTable => "finite",
                SemiringKind::NatPlusTimes => "nat_plus",
                SemiringKind::NatGcdTimes => "nat_gcd",
                SemiringKind::NatPoly => "poly",
            },
        });
    }
    mult.prime_support()
}

/// Generator of a gcd ideal, as `u64`.
pub fn generator_of(ideal: &Ideal) -> Result<u64> {
    ideal.gcd_generator().ok_or(Error::KindMismatch {
        expected: SemiringKind::NatGcdTimes,
        found: "ideal",
    })
}

pub fn factor(n: u64) -> Result<Factorization> {
    arith::factor(n)
}

/// The form `(v·p^n)` of `(q)`, if `(q)` is S-primary.
pub fn s_primary_form(q: u64, mult: &MultSet) -> Result<Option<SPrimaryForm>> {
    let support = check_gcd(mult)?;
    match q {
        0 => return Err(Error::ZeroInput),
        1 => return Err(Error::UnitIdeal),
        _ => {}
    }
    let f = arith::factor(q)?;
    let outside: Vec<(u64, u32)> = f
        .factors
        .iter()
        .filter(|(p, _)| !support.contains(p))
        .map(|(&p, &e)| (p, e))
        .collect();
    let [(p, n)] = outside[..] else {
        return Ok(None);
    };
    Ok(Some(SPrimaryForm {
        v: q / p.pow(n),
        p,
        n,
    }))
}

/// `(q)` is S-prime: the form exists with `n = 1`.
pub fn is_s_prime_form(q: u64, mult: &MultSet) -> Result<bool> {
    Ok(s_primary_form(q, mult)?.is_some_and(|f| f.n == 1))
}

/// `S(b)`: the generator with every prime of `P_S` removed.
pub fn contraction(b: u64, mult: &MultSet) -> Result<u64> {
    let support = check_gcd(mult)?;
    if b == 0 {
        return Err(Error::ZeroInput);
    }
    Ok(arith::strip_primes(b, &support))
}

/// `√ˢ(a)`: the product of the primes of `a` outside `P_S`.
pub fn s_radical_closed(a: u64, mult: &MultSet) -> Result<u64> {
    let support = check_gcd(mult)?;
    if a == 0 {
        return Ok(0);
    }
    Ok(arith::radical(arith::strip_primes(a, &support)))
}

/// Components `(w·p_i^{e_i})`, where `w` is the `P_S`-part of `a` and the
/// `p_i^{e_i}` are the prime powers outside `P_S`.
pub fn s_primary_decompose(a: u64, mult: &MultSet) -> Result<Decomposition> {
    let support = check_gcd(mult)?;
    match a {
        0 => return Err(Error::ZeroInput),
        1 => return Err(Error::UnitIdeal),
        _ => {}
    }
    let f = arith::factor(a)?;
    let w: u64 = f
        .factors
        .iter()
        .filter(|(p, _)| support.contains(p))
        .map(|(&p, &e)| p.pow(e))
        .product();
    let components: Vec<Component> = f
        .factors
        .iter()
        .filter(|(p, _)| !support.contains(p))
        .map(|(&p, &n)| Component {
            generator: w * p.pow(n),
            form: SPrimaryForm { v: w, p, n },
        })
        .collect();
    if components.is_empty() {
        return Err(Error::NotDisjoint);
    }
    let gens: Vec<u64> = components.iter().map(|c| c.generator).collect();
    let minimality = minimality_check(&gens, mult)?;
    let mut associated_primes = Vec::new();
    for &g in &gens {
        associated_primes.push(contraction(arith::radical(g), mult)?);
    }
    associated_primes.sort_unstable();
    associated_primes.dedup();
    Ok(Decomposition {
        input: a,
        mult: mult.clone(),
        components,
        associated_primes,
        minimal: minimality.holds(),
        minimality,
    })
}

/// Minimality conditions, on contracted radicals and contracted components.
pub fn minimality_check(components: &[u64], mult: &MultSet) -> Result<Minimality> {
    let mut radicals = Vec::with_capacity(components.len());
    let mut contracted = Vec::with_capacity(components.len());
    for &g in components {
        radicals.push(contraction(arith::radical(g), mult)?);
        contracted.push(contraction(g, mult)?);
    }
    let n = components.len();
    let distinct_radicals = (0..n).all(|i| (0..i).all(|j| radicals[i] != radicals[j]));
    // (x) ⊆ (y) iff y | x.
    let sub = |x: u64, y: u64| x.is_multiple_of(y);
    let non_inclusion = (0..n).all(|i| (0..n).all(|j| i == j || !sub(contracted[i], contracted[j])));
    let mut irredundant = true;
    for i in 0..n {
        let mut others = 1u64;
        for (j, &c) in contracted.iter().enumerate() {
            if j != i {
                others = arith::lcm(others, c).ok_or_else(|| Error::Overflow("lcm".into()))?;
            }
        }
        if sub(others, contracted[i]) {
            irredundant = false;
        }
    }
    Ok(Minimality {
        distinct_radicals,
        non_inclusion,
        irredundant,
    })
}

/// Prime ideals among `S(√((a) : x))`, with `x` over the divisors of `a`
/// (the colon depends on `x` only through `gcd(a, x)`). Generators, ascending.
pub fn associated_primes_via_colon(a: u64, mult: &MultSet) -> Result<Vec<u64>> {
    s_primary_decompose(a, mult)?;
    let mut primes = Vec::new();
    for x in arith::divisors(a) {
        let colon = a / x;
        if colon == 1 {
            continue;
        }
        let c = contraction(arith::radical(colon), mult)?;
        if arith::is_prime(c) {
            primes.push(c);
        }
    }
    primes.sort_unstable();
    primes.dedup();
    Ok(primes)
}

/// `√(q) = (rad(v)·p)` is S-k-maximal, decided over the divisor lattice.
pub fn radical_is_s_maximal(q: u64, mult: &MultSet, bounds: &Bounds) -> Result<Verdict> {
    let Some(form) = s_primary_form(q, mult)? else {
        return Err(Error::PreconditionFailed(format!("({q}) is not S-primary")));
    };
    let p = arith::radical(form.v) * form.p;
    classify::is_s_k_maximal(&Ideal::gcd_ideal(p), mult, bounds)
}

/// `√ˢP = √ˢA` whenever `A` is S-P-primary; `None` when it is not.
pub fn s_radical_agrees_on_p_primary(p: u64, a: u64, mult: &MultSet, bounds: &Bounds) -> Result<Option<bool>> {
    check_gcd(mult)?;
    let v = classify::is_s_p_primary(&Ideal::gcd_ideal(a), &Ideal::gcd_ideal(p), mult, bounds)?;
    if !v.is_proved() {
        return Ok(None);
    }
    Ok(Some(s_radical_closed(p, mult)? == s_radical_closed(a, mult)?))
}

/// Elements `S` generated by the given naturals in `(N0, gcd, ·)`.
pub fn gcd_mult_set(gens: &[u64]) -> Result<MultSet> {
    let gens: Vec<Element> = gens.iter().map(|&g| Element::nat(g)).collect();
    MultSet::new(&Semiring::NatGcdTimes, &gens)
}
