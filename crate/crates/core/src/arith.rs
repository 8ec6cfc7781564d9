//! 64-bit integer arithmetic: factorization, radicals and divisor lattices.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

const TRIAL_LIMIT: u64 = 1_000_000;

/// Prime factorization of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    pub value: u64,
    pub factors: BTreeMap<u64, u32>,
}

impl Factorization {
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.keys().copied()
    }

    pub fn exponent(&self, p: u64) -> u32 {
        self.factors.get(&p).copied().unwrap_or(0)
    }

    pub fn product(&self) -> u64 {
        self.factors.iter().map(|(&p, &e)| p.pow(e)).product()
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Least common multiple, or `None` on overflow.
pub fn lcm(a: u64, b: u64) -> Option<u64> {
    if a == 0 || b == 0 {
        return Some(0);
    }
    (a / gcd(a, b)).checked_mul(b)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in SMALL {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent's variant of Pollard rho; `n` must be composite and odd.
fn pollard_rho(n: u64) -> u64 {
    for c in 1.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
    }
    unreachable!()
}

fn split_large(n: u64, out: &mut BTreeMap<u64, u32>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        *out.entry(n).or_insert(0) += 1;
        return;
    }
    let d = pollard_rho(n);
    split_large(d, out);
    split_large(n / d, out);
}

/// Exact factorization: trial division below 10^6, then Miller-Rabin and rho.
pub fn factor(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let mut factors = BTreeMap::new();
    let mut m = n;
    let mut p = 2u64;
    while p < TRIAL_LIMIT && p * p <= m {
        while m.is_multiple_of(p) {
            *factors.entry(p).or_insert(0) += 1;
            m /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        split_large(m, &mut factors);
    }
    Ok(Factorization { value: n, factors })
}

/// Factorization of an arbitrary-precision input, capped at 64 bits.
pub fn factor_big(n: &num_bigint::BigUint) -> Result<Factorization> {
    let v = num_traits::ToPrimitive::to_u64(n).ok_or_else(|| Error::Overflow(n.to_string()))?;
    factor(v)
}

/// Product of the distinct primes of `n` (`rad(0) = 0`).
pub fn radical(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    factor(n).expect("nonzero").primes().product()
}

/// All positive divisors in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let f = factor(n).expect("divisors of zero");
    let mut divs = vec![1u64];
    for (&p, &e) in &f.factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for &d in &divs {
            let mut q = d;
            for _ in 0..=e {
                next.push(q);
                q = q.saturating_mul(p);
            }
        }
        divs = next;
    }
    divs.sort_unstable();
    divs
}

/// Largest divisor of `n` coprime to every prime in `primes`.
pub fn strip_primes(mut n: u64, primes: &[u64]) -> u64 {
    for &p in primes {
        if n == 0 {
            break;
        }
        while n.is_multiple_of(p) {
            n /= p;
        }
    }
    n
}

/// Least `k` with `d | x^k`, if any. Requires `d >= 1`.
pub fn least_power_divisible(x: u64, d: u64) -> Option<u32> {
    if d == 1 {
        return Some(0);
    }
    if x == 0 {
        return Some(1);
    }
    let f = factor(d).expect("positive");
    let mut k = 0u32;
    for (&p, &e) in &f.factors {
        let mut v = 0u32;
        let mut y = x;
        while y.is_multiple_of(p) {
            v += 1;
            y /= p;
        }
        if v == 0 {
            return None;
        }
        k = k.max(e.div_ceil(v));
    }
    Some(k)
}
