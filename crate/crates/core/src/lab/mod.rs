//! Exhaustive theorem sweeps over finite semirings.
//!
//! Each checker walks every (semiring, S, ideal tuple) in scope, skips the
//! instances whose hypotheses fail (counting them by reason), and records
//! every instance whose conclusion fails.

pub mod catalog;
pub mod ctx;
pub mod hom;
mod theorems;

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
pub use catalog::{catalog, Entry, EntrySummary};
pub use ctx::{enumerate_ideals, enumerate_k_ideals, enumerate_mult_sets};

/// Largest order accepted for a full theorem sweep.
pub const SWEEP_CAP: usize = 5;
/// Largest order accepted for ideal enumeration.
pub const IDEAL_CAP: usize = 6;
/// Homomorphisms are enumerated between entries of at most this order.
pub const HOM_CAP: usize = 4;
/// Violations kept verbatim per report; the count covers all of them.
pub const MAX_RECORDED: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum TheoremId {
    #[serde(rename = "T_intersection")]
    Intersection,
    #[serde(rename = "T_principal_k")]
    PrincipalK,
    #[serde(rename = "T_irreducible")]
    Irreducible,
    #[serde(rename = "T_existence")]
    Existence,
    #[serde(rename = "T_corollary")]
    Corollary,
    #[serde(rename = "T_sradical_prime")]
    SradicalPrime,
    #[serde(rename = "T_colon_shift")]
    ColonShift,
    #[serde(rename = "T_hom")]
    Hom,
    #[serde(rename = "T_lemma6")]
    Lemma6,
    #[serde(rename = "T_remark_search")]
    RemarkSearch,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::Intersection,
        TheoremId::PrincipalK,
        TheoremId::Irreducible,
        TheoremId::Existence,
        TheoremId::Corollary,
        TheoremId::SradicalPrime,
        TheoremId::ColonShift,
        TheoremId::Hom,
        TheoremId::Lemma6,
        TheoremId::RemarkSearch,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Intersection => "T_intersection",
            TheoremId::PrincipalK => "T_principal_k",
            TheoremId::Irreducible => "T_irreducible",
            TheoremId::Existence => "T_existence",
            TheoremId::Corollary => "T_corollary",
            TheoremId::SradicalPrime => "T_sradical_prime",
            TheoremId::ColonShift => "T_colon_shift",
            TheoremId::Hom => "T_hom",
            TheoremId::Lemma6 => "T_lemma6",
            TheoremId::RemarkSearch => "T_remark_search",
        }
    }

    pub fn parse(s: &str) -> Option<TheoremId> {
        TheoremId::ALL.into_iter().find(|t| t.name() == s)
    }

    /// Searches whose findings never fail the sweep.
    pub fn informational_only(self) -> bool {
        self == TheoremId::RemarkSearch
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Test hook that corrupts every checked conclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mutation {
    #[default]
    None,
    NegateConclusion,
}

/// Which structural hypotheses are enforced by the checkers that carry them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HypothesisMode {
    #[default]
    Strict,
    /// Keep cancellativity and yokedness, drop zerosumfreeness.
    DropZerosumfree,
    DropAll,
}

#[derive(Debug, Clone)]
pub struct LabConfig {
    pub order_cap: usize,
    pub mutation: Mutation,
    pub mode: HypothesisMode,
    pub time_budget: Option<Duration>,
    pub parallel: bool,
}

impl Default for LabConfig {
    fn default() -> Self {
        LabConfig {
            order_cap: SWEEP_CAP,
            mutation: Mutation::None,
            mode: HypothesisMode::Strict,
            time_budget: None,
            parallel: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub semiring: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mult_set: Option<String>,
    pub detail: String,
    /// Element indices, meaning given per theorem in `detail`.
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ReportStatus {
    AllPassed,
    Violated,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub id: TheoremId,
    pub semirings: usize,
    pub instances_checked: u64,
    /// Instances skipped because a hypothesis failed, by reason.
    pub vacuous: BTreeMap<String, u64>,
    pub status: ReportStatus,
    pub violation_count: u64,
    pub violations: Vec<Violation>,
    /// Findings that do not bear on the status: hits of the remark search,
    /// and conclusions failing on instances that miss a structural flag.
    pub informational_count: u64,
    pub informational: Vec<Violation>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.status == ReportStatus::AllPassed
    }
}

/// Accumulator for one checker over one semiring (or pair).
#[derive(Debug, Default, Clone)]
pub(crate) struct Tally {
    checked: u64,
    vacuous: BTreeMap<String, u64>,
    violation_count: u64,
    violations: Vec<Violation>,
    info_count: u64,
    info: Vec<Violation>,
    negate: bool,
}

impl Tally {
    fn new(mutation: Mutation) -> Tally {
        Tally {
            negate: mutation == Mutation::NegateConclusion,
            ..Tally::default()
        }
    }

    pub fn skip(&mut self, reason: &str) {
        *self.vacuous.entry(reason.to_string()).or_default() += 1;
    }

    /// Records one hypothesis-satisfying instance.
    pub fn check(&mut self, holds: bool, v: impl FnOnce() -> Violation) {
        self.checked += 1;
        if holds == self.negate {
            self.violation_count += 1;
            if self.violations.len() < MAX_RECORDED {
                self.violations.push(v());
            }
        }
    }

    /// Records a failing conclusion outside the hypotheses.
    pub fn info(&mut self, holds: bool, v: impl FnOnce() -> Violation) {
        if !holds {
            self.info_count += 1;
            if self.info.len() < MAX_RECORDED {
                self.info.push(v());
            }
        }
    }

    fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        for (k, v) in other.vacuous {
            *self.vacuous.entry(k).or_default() += v;
        }
        self.violation_count += other.violation_count;
        let room = MAX_RECORDED - self.violations.len();
        self.violations.extend(other.violations.into_iter().take(room));
        self.info_count += other.info_count;
        let room = MAX_RECORDED - self.info.len();
        self.info.extend(other.info.into_iter().take(room));
    }

    fn report(self, id: TheoremId, semirings: usize) -> TheoremReport {
        let violated = !id.informational_only() && self.violation_count > 0;
        TheoremReport {
            id,
            semirings,
            instances_checked: self.checked,
            vacuous: self.vacuous,
            status: if violated { ReportStatus::Violated } else { ReportStatus::AllPassed },
            violation_count: self.violation_count,
            violations: self.violations,
            informational_count: self.info_count,
            informational: self.info,
        }
    }
}

struct Clock {
    start: Instant,
    budget: Option<Duration>,
}

impl Clock {
    fn check(&self) -> Result<()> {
        match self.budget {
            Some(b) if self.start.elapsed() > b => Err(Error::TimeBudget(b)),
            _ => Ok(()),
        }
    }
}

fn check_scope(scope: &[Entry], cap: usize) -> Result<()> {
    let cap = cap.min(SWEEP_CAP);
    match scope.iter().map(|e| e.ring.order()).find(|&o| o > cap) {
        Some(order) => Err(Error::OrderCap { order, cap }),
        None => Ok(()),
    }
}

fn run_checker(id: TheoremId, scope: &[Entry], cfg: &LabConfig, clock: &Clock) -> Result<TheoremReport> {
    let map = |f: &(dyn Fn(usize) -> Result<Tally> + Sync), n: usize| -> Result<Vec<Tally>> {
        if cfg.parallel {
            (0..n).into_par_iter().map(f).collect()
        } else {
            (0..n).map(f).collect()
        }
    };
    let (parts, semirings) = if id == TheoremId::Hom {
        let small: Vec<&Entry> = scope.iter().filter(|e| e.ring.order() <= HOM_CAP).collect();
        let ctxs: Vec<ctx::Ctx> = small.iter().map(|e| ctx::Ctx::new(&e.ring)).collect();
        let parts = map(
            &|i| {
                clock.check()?;
                let mut t = Tally::new(cfg.mutation);
                for (j, target) in small.iter().enumerate() {
                    hom::check_pair(small[i], &ctxs[i], target, &ctxs[j], &mut t);
                }
                Ok(t)
            },
            small.len(),
        )?;
        (parts, small.len())
    } else {
        let parts = map(
            &|i| {
                clock.check()?;
                let mut t = Tally::new(cfg.mutation);
                theorems::check(id, &scope[i], cfg.mode, &mut t);
                Ok(t)
            },
            scope.len(),
        )?;
        (parts, scope.len())
    };
    let mut total = Tally::new(cfg.mutation);
    for p in parts {
        total.merge(p);
    }
    clock.check()?;
    Ok(total.report(id, semirings))
}

/// Runs one checker over `scope`.
pub fn check_theorem(id: TheoremId, scope: &[Entry], cfg: &LabConfig) -> Result<TheoremReport> {
    check_scope(scope, cfg.order_cap)?;
    let clock = Clock {
        start: Instant::now(),
        budget: cfg.time_budget,
    };
    run_checker(id, scope, cfg, &clock)
}

/// Runs every checker over `scope`, in the order of [`TheoremId::ALL`].
/// An empty scope yields no reports.
pub fn run_all(scope: &[Entry], cfg: &LabConfig) -> Result<Vec<TheoremReport>> {
    if scope.is_empty() {
        return Ok(Vec::new());
    }
    check_scope(scope, cfg.order_cap)?;
    let clock = Clock {
        start: Instant::now(),
        budget: cfg.time_budget,
    };
    TheoremId::ALL.iter().map(|&id| run_checker(id, scope, cfg, &clock)).collect()
}

/// Whether a sweep should fail: some hypothesis-satisfying instance broke its theorem.
pub fn any_violated(reports: &[TheoremReport]) -> bool {
    reports.iter().any(|r| !r.passed())
}

/// Catalog entries of order up to `order_cap`, optionally restricted to the given names.
pub fn scope(order_cap: usize, names: Option<&[String]>) -> Result<Vec<Entry>> {
    if order_cap > SWEEP_CAP {
        return Err(Error::OrderCap { order: order_cap, cap: SWEEP_CAP });
    }
    let all = catalog(order_cap)?;
    let Some(names) = names else {
        return Ok(all);
    };
    // Named instances answer to their own names even where the search
    // already lists them as `S<n>.<k>`.
    let named = catalog::named()?;
    let mut out = Vec::new();
    for n in names {
        let e = all
            .iter()
            .chain(named.iter().filter(|e| e.ring.order() <= order_cap))
            .find(|e| &e.name == n);
        match e {
            Some(e) => out.push(e.clone()),
            None if named.iter().any(|e| &e.name == n) => {
                return Err(Error::PreconditionFailed(format!("{n} has order above the cap {order_cap}")));
            }
            None => return Err(Error::PreconditionFailed(format!("no catalog entry named {n}"))),
        }
    }
    Ok(out)
}
