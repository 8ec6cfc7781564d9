//! Ideals of `(N0, +, ·)`.
//!
//! Since `r·g = g + .. + g`, the ideal generated by `g1, .., gk` is the
//! additive submonoid they generate. Dividing out `d = gcd(gi)` leaves a
//! numerical semigroup, whose membership is decided by its Apéry set with
//! respect to the least reduced generator.

use std::collections::BinaryHeap;
use std::cmp::Reverse;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest reduced generator (and thus Apéry table) accepted.
pub const APERY_CAP: u64 = 1 << 22;
/// Largest scan range used when recovering generators from a predicate.
pub const RECOVERY_CAP: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Submonoid {
    /// Minimal generating set, ascending. Empty for the zero ideal.
    gens: Vec<u64>,
    /// gcd of the generators, `0` for the zero ideal.
    d: u64,
    /// `apery[r]` is the least reduced member congruent to `r` modulo the
    /// least reduced generator.
    apery: Vec<u64>,
}

impl Submonoid {
    pub fn zero() -> Submonoid {
        Submonoid {
            gens: Vec::new(),
            d: 0,
            apery: Vec::new(),
        }
    }

    pub fn generated(gens: &[u64]) -> Result<Submonoid> {
        let mut sorted: Vec<u64> = gens.iter().copied().filter(|&g| g != 0).collect();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.is_empty() {
            return Ok(Submonoid::zero());
        }
        let d = sorted.iter().fold(0, |acc, &g| acc.gcd(&g));
        let m = sorted[0] / d;
        if m > APERY_CAP {
            return Err(Error::Unsupported(format!(
                "reduced generator {m} exceeds the Apéry table cap {APERY_CAP}"
            )));
        }
        // The least generator is always minimal, and once present the Apéry
        // table modulo it decides membership for the partial set.
        let mut minimal: Vec<u64> = vec![sorted[0]];
        for &g in &sorted[1..] {
            let probe = Submonoid::with_minimal(minimal.clone(), d, m);
            if !probe.contains_u128(g as u128) {
                minimal.push(g);
            }
        }
        Ok(Submonoid::with_minimal(minimal, d, m))
    }

    fn with_minimal(gens: Vec<u64>, d: u64, m: u64) -> Submonoid {
        let apery = apery_set(&gens.iter().map(|g| g / d).collect::<Vec<_>>(), m);
        Submonoid { gens, d, apery }
    }

    pub fn generators(&self) -> &[u64] {
        &self.gens
    }

    pub fn gcd(&self) -> u64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.d == 0
    }

    /// Least `c` such that every multiple of `gcd` at or above `c` is a member.
    pub fn conductor(&self) -> u128 {
        if self.d == 0 {
            return 0;
        }
        let m = self.apery.len() as u128;
        let unreached = self.apery.contains(&u64::MAX);
        if unreached {
            return u128::MAX;
        }
        let frob = self.apery.iter().map(|&a| a as u128).max().unwrap_or(0) as i128 - m as i128;
        (frob + 1).max(0) as u128 * self.d as u128
    }

    pub fn contains_u128(&self, x: u128) -> bool {
        if x == 0 {
            return true;
        }
        if self.d == 0 {
            return false;
        }
        let d = self.d as u128;
        if !x.is_multiple_of(d) {
            return false;
        }
        let y = x / d;
        if self.apery.is_empty() {
            // Only reachable while the generating set is still being built.
            return false;
        }
        let m = self.apery.len() as u128;
        let a = self.apery[(y % m) as usize];
        a != u64::MAX && y >= a as u128
    }

    pub fn contains(&self, x: &BigUint) -> bool {
        if let Some(v) = x.to_u128() {
            return self.contains_u128(v);
        }
        if self.d == 0 {
            return false;
        }
        let (q, r) = x.div_rem(&BigUint::from(self.d));
        if !r.is_zero() {
            return false;
        }
        let m = self.apery.len() as u64;
        let res = (&q % m).to_u64().expect("residue fits");
        let a = self.apery[res as usize];
        a != u64::MAX && q >= BigUint::from(a)
    }

    /// Rebuilds a submonoid from a membership predicate.
    ///
    /// Preconditions: every member is a multiple of `period`, and every
    /// multiple of `period` at or above `conductor` is a member.
    pub fn recover(period: u64, conductor: u128, member: impl Fn(u64) -> bool) -> Result<Submonoid> {
        if period == 0 {
            return Ok(Submonoid::zero());
        }
        let p = period as u128;
        let top_mult = conductor.div_ceil(p);
        let first = (1..=top_mult.max(1))
            .find(|&k| k * p >= conductor || member((k * p) as u64))
            .unwrap_or(top_mult.max(1));
        // Minimal generators never exceed conductor + least positive member.
        let limit = top_mult + first;
        if limit > RECOVERY_CAP as u128 || limit * p > u64::MAX as u128 {
            return Err(Error::Unsupported(format!(
                "generator recovery would scan {limit} multiples of {period}"
            )));
        }
        let limit = limit as usize;
        let mut reach = vec![false; limit + 1];
        reach[0] = true;
        let mut gens = Vec::new();
        for k in 1..=limit {
            let is_member = k as u128 * p >= conductor || member(k as u64 * period);
            if is_member && !reach[k] {
                gens.push(k as u64 * period);
                for j in k..=limit {
                    if reach[j - k] {
                        reach[j] = true;
                    }
                }
            }
        }
        Submonoid::generated(&gens)
    }
}

/// Dijkstra over residues modulo `m`; unreachable residues hold `u64::MAX`.
fn apery_set(gens: &[u64], m: u64) -> Vec<u64> {
    let m = m as usize;
    let mut dist = vec![u64::MAX; m];
    if m == 0 {
        return dist;
    }
    dist[0] = 0;
    let mut heap = BinaryHeap::from([Reverse((0u64, 0usize))]);
    while let Some(Reverse((w, r))) = heap.pop() {
        if w > dist[r] {
            continue;
        }
        for &g in gens {
            let nw = w.saturating_add(g);
            let nr = (r + (g % m as u64) as usize) % m;
            if nw < dist[nr] {
                dist[nr] = nw;
                heap.push(Reverse((nw, nr)));
            }
        }
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Dynamic-programming oracle: members of the submonoid up to `n`.
    fn dp_members(gens: &[u64], n: usize) -> Vec<bool> {
        let mut reach = vec![false; n + 1];
        reach[0] = true;
        for x in 1..=n {
            reach[x] = gens.iter().any(|&g| g != 0 && g as usize <= x && reach[x - g as usize]);
        }
        reach
    }

    #[test]
    fn four_six() {
        let s = Submonoid::generated(&[4, 6]).unwrap();
        assert_eq!(s.generators(), &[4, 6]);
        let members: Vec<u64> = (0..=14).filter(|&x| s.contains_u128(x as u128)).collect();
        assert_eq!(members, vec![0, 4, 6, 8, 10, 12, 14]);
        assert!(!s.contains_u128(2));
        assert_eq!(s.conductor(), 4);
    }

    #[test]
    fn agrees_with_dp() {
        for gens in [vec![3, 5], vec![6, 10, 15], vec![4, 6, 9], vec![7], vec![12, 18, 8], vec![5, 8, 13]] {
            let s = Submonoid::generated(&gens).unwrap();
            let oracle = dp_members(&gens, 300);
            for (x, &expected) in oracle.iter().enumerate() {
                assert_eq!(s.contains_u128(x as u128), expected, "{gens:?} at {x}");
            }
        }
    }

    #[test]
    fn minimal_generators() {
        let s = Submonoid::generated(&[6, 4, 8, 10, 0, 4]).unwrap();
        assert_eq!(s.generators(), &[4, 6]);
        assert!(Submonoid::generated(&[0]).unwrap().is_zero());
    }

    #[test]
    fn recover_intersection() {
        let a = Submonoid::generated(&[4, 6]).unwrap();
        let b = Submonoid::generated(&[3]).unwrap();
        let c = a.conductor().max(b.conductor());
        let r = Submonoid::recover(6, c, |x| a.contains_u128(x as u128) && b.contains_u128(x as u128)).unwrap();
        assert_eq!(r.generators(), &[6]);
        let a = Submonoid::generated(&[3, 5]).unwrap();
        let b = Submonoid::generated(&[2]).unwrap();
        let c = a.conductor().max(b.conductor());
        let r = Submonoid::recover(2, c, |x| a.contains_u128(x as u128) && b.contains_u128(x as u128)).unwrap();
        let oracle: Vec<u64> = (0..100).filter(|&x| x % 2 == 0 && dp_members(&[3, 5], 100)[x as usize]).collect();
        let got: Vec<u64> = (0..100).filter(|&x| r.contains_u128(x as u128)).collect();
        assert_eq!(got, oracle);
    }

    #[test]
    fn big_membership() {
        let s = Submonoid::generated(&[4, 6]).unwrap();
        let big = BigUint::from(u128::MAX) * 2u32;
        assert!(s.contains(&big));
        assert!(!s.contains(&(big + 1u32)));
    }
}
