//! The catalog of finite semirings: every commutative semiring of small
//! order found by table search, plus named larger instances.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semiring::finite::{build, FiniteSemiring, StructureFlags};

/// Largest order searched exhaustively.
pub const SEARCH_LIMIT: usize = 4;

#[derive(Debug, Clone)]
pub struct Entry {
    pub name: String,
    pub ring: FiniteSemiring,
    pub flags: StructureFlags,
}

impl Entry {
    fn new(name: impl Into<String>, ring: FiniteSemiring) -> Entry {
        let flags = ring.structure_flags();
        Entry {
            name: name.into(),
            ring,
            flags,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EntrySummary {
    pub name: String,
    pub order: usize,
    pub flags: StructureFlags,
}

/// All semirings on `{0, .., n-1}` with zero `0` and one `1`, up to
/// permutations of the carrier fixing both.
pub fn search(n: usize) -> Result<Vec<FiniteSemiring>> {
    if n > SEARCH_LIMIT {
        return Err(Error::OrderCap { order: n, cap: SEARCH_LIMIT });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![FiniteSemiring::new(vec![vec![0]], vec![vec![0]], 0, 0)?]);
    }
    let add_cells: Vec<(usize, usize)> = (1..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mul_cells: Vec<(usize, usize)> = (2..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut add = vec![0usize; n * n];
    for i in 0..n {
        add[i] = i;
        add[i * n] = i;
    }
    let mut mul = vec![0usize; n * n];
    for i in 0..n {
        mul[n + i] = i;
        mul[i * n + 1] = i;
    }
    let mut found = BTreeSet::new();
    let mut out = Vec::new();
    for_each_assignment(&add_cells, n, &mut add, n, &mut |add| {
        if !associative(add, n) {
            return;
        }
        let mut mul = mul.clone();
        for_each_assignment(&mul_cells, n, &mut mul, n, &mut |mul| {
            let cand = FiniteSemiring::from_raw(n, add.to_vec(), mul.to_vec(), 0, 1);
            if cand.validate().is_err() {
                return;
            }
            if found.insert(canonical_code(add, mul, n)) {
                out.push(cand);
            }
        });
    });
    Ok(out)
}

/// Calls `f` for every symmetric filling of `cells` with values below `values`.
fn for_each_assignment(cells: &[(usize, usize)], values: usize, table: &mut [usize], n: usize, f: &mut impl FnMut(&[usize])) {
    let Some((&(i, j), rest)) = cells.split_first() else {
        f(table);
        return;
    };
    for v in 0..values {
        table[i * n + j] = v;
        table[j * n + i] = v;
        for_each_assignment(rest, values, table, n, f);
    }
}

fn associative(t: &[usize], n: usize) -> bool {
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]])))
}

/// Least relabelled encoding over permutations of `{2, .., n-1}`.
fn canonical_code(add: &[usize], mul: &[usize], n: usize) -> Vec<usize> {
    let mut rest: Vec<usize> = (2..n).collect();
    let mut best: Option<Vec<usize>> = None;
    permute(&mut rest, 0, &mut |tail| {
        let mut p = vec![0, 1];
        p.extend_from_slice(tail);
        let mut code = vec![0; 2 * n * n];
        for a in 0..n {
            for b in 0..n {
                code[p[a] * n + p[b]] = p[add[a * n + b]];
                code[n * n + p[a] * n + p[b]] = p[mul[a * n + b]];
            }
        }
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    });
    best.expect("at least one permutation")
}

fn permute(xs: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == xs.len() {
        f(xs);
        return;
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        permute(xs, k + 1, f);
        xs.swap(k, i);
    }
}

/// Named instances of orders 4 to 6.
pub fn named() -> Result<Vec<Entry>> {
    let b = build::boolean();
    let z2 = build::modular(2)?;
    Ok(vec![
        Entry::new("Z4", build::modular(4)?),
        Entry::new("Z2xZ2", build::product(&z2, &z2)?),
        Entry::new("B2xB2", build::product(&b, &b)?),
        Entry::new("C4", build::chain(4)?),
        Entry::new("T4", build::truncated(4)?),
        Entry::new("Z5", build::modular(5)?),
        Entry::new("C5", build::chain(5)?),
        Entry::new("T5", build::truncated(5)?),
        Entry::new("Z6", build::modular(6)?),
        Entry::new("BxZ3", build::product(&b, &build::modular(3)?)?),
        Entry::new("C6", build::chain(6)?),
        Entry::new("T6", build::truncated(6)?),
    ])
}

/// Searched semirings of order up to `min(max_order, SEARCH_LIMIT)`, named
/// `S<order>.<index>`, followed by named instances of larger order up to
/// `max_order`.
pub fn catalog(max_order: usize) -> Result<Vec<Entry>> {
    let depth = max_order.min(SEARCH_LIMIT);
    let mut out = Vec::new();
    for n in 1..=depth {
        for (k, ring) in search(n)?.into_iter().enumerate() {
            out.push(Entry::new(format!("S{n}.{k}"), ring));
        }
    }
    out.extend(named()?.into_iter().filter(|e| e.ring.order() > depth && e.ring.order() <= max_order));
    Ok(out)
}
