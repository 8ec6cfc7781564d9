use std::collections::HashMap;

use num_traits::ToPrimitive;
use serde::Serialize;

use super::{ElemLit, MultDef, Query, Ref, Script, SemiringDef, StmtKind};
use crate::classify;
use crate::config::Bounds;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::lab::{self, LabConfig, TheoremReport};
use crate::multset::MultSet;
use crate::pisd::{self, Decomposition};
use crate::semiring::{make_finite_semiring, Element, Poly, Semiring};
use crate::verdict::Verdict;

/// Order of the catalog swept by `lab run` without an explicit bound.
pub const DEFAULT_LAB_ORDER: usize = 3;

#[derive(Debug, Clone, Copy, Default)]
pub struct RunConfig {
    pub bounds: Bounds,
    pub json: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct LabOutcome {
    pub order_cap: usize,
    pub all_passed: bool,
    pub reports: Vec<TheoremReport>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Verdict(Verdict),
    ResultIdeal(Ideal),
    ResultIdeals(Vec<Ideal>),
    Decomposition(Decomposition),
    Member(bool),
    Lab(LabOutcome),
    Error(String),
}

impl LabOutcome {
    pub fn text(&self) -> String {
        let head = if self.all_passed { "all passed" } else { "violations found" };
        let mut out = format!("lab run order<={}: {head}", self.order_cap);
        for r in &self.reports {
            let vac: u64 = r.vacuous.values().sum();
            out.push_str(&format!(
                "\n  {}: {:?}, {} checked, {} vacuous, {} violations",
                r.id, r.status, r.instances_checked, vac, r.violation_count
            ));
            if r.informational_count > 0 {
                out.push_str(&format!(", {} informational", r.informational_count));
            }
        }
        out
    }
}

/// One report block: per query, and per failed declaration.
#[derive(Debug, Clone, Serialize)]
pub struct QueryReport {
    pub line: usize,
    pub column: usize,
    pub command: &'static str,
    pub statement: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mult_set: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element: Option<String>,
    pub bounds: Bounds,
    #[serde(flatten)]
    pub outcome: Outcome,
}

impl QueryReport {
    pub fn is_error(&self) -> bool {
        matches!(self.outcome, Outcome::Error(_))
    }

    fn text(&self) -> String {
        let i = self.ideal.as_deref().unwrap_or("");
        let wrt = self.mult_set.as_ref().map(|s| format!(" wrt {s}")).unwrap_or_default();
        match &self.outcome {
            Outcome::Error(e) => format!("error at {}:{}: {}: {e}", self.line, self.column, self.statement),
            Outcome::Verdict(v) => format!("{} {i}{wrt}: {v}", self.statement.split(' ').take(2).collect::<Vec<_>>().join(" ")),
            Outcome::ResultIdeal(j) => match self.command {
                "colon" => format!("colon {i} by {} = {j}", self.element.as_deref().unwrap_or("")),
                c => format!("{c} {i}{wrt} = {j}"),
            },
            Outcome::ResultIdeals(js) => {
                let parts: Vec<String> = js.iter().map(ToString::to_string).collect();
                format!("{} {i}{wrt} = {}", self.command, parts.join(", "))
            }
            Outcome::Decomposition(d) => {
                let comps: Vec<String> = d.component_ideals().iter().map(ToString::to_string).collect();
                let primes: Vec<String> = d.associated_primes.iter().map(|p| format!("({p})")).collect();
                format!(
                    "decompose {i}{wrt}: components {}; associated primes {}; minimal={}",
                    comps.join(", "),
                    primes.join(", "),
                    d.minimal
                )
            }
            Outcome::Member(b) => format!("member {i} {}: {b}", self.element.as_deref().unwrap_or("")),
            Outcome::Lab(l) => l.text(),
        }
    }
}

/// Renders reports as text blocks or as one JSON object per line.
pub fn render(reports: &[QueryReport], json: bool) -> String {
    let mut out = String::new();
    for r in reports {
        if json {
            out.push_str(&serde_json::to_string(r).expect("reports serialize"));
        } else {
            out.push_str(&r.text());
        }
        out.push('\n');
    }
    out
}

#[derive(Default)]
struct Env {
    semirings: HashMap<String, std::result::Result<Semiring, String>>,
    mults: HashMap<String, std::result::Result<MultSet, String>>,
    ideals: HashMap<String, std::result::Result<Ideal, String>>,
}

fn lookup<T: Clone>(map: &HashMap<String, std::result::Result<T, String>>, name: &str) -> Result<T> {
    match map.get(name) {
        Some(Ok(v)) => Ok(v.clone()),
        Some(Err(_)) => Err(Error::PreconditionFailed(format!("'{name}' failed to declare"))),
        None => Err(Error::PreconditionFailed(format!("'{name}' is not declared"))),
    }
}

fn element(r: &Semiring, e: &ElemLit) -> Result<Element> {
    let el = match (r, e) {
        (Semiring::Finite(_), ElemLit::Num(n)) => Element::Finite(n.to_usize().unwrap_or(usize::MAX)),
        (Semiring::NatPoly, ElemLit::Num(n)) => Element::Poly(Poly::constant(n.clone())),
        (_, ElemLit::Num(n)) => Element::Nat(n.clone()),
        (Semiring::NatPoly, ElemLit::Poly(p)) => Element::Poly(p.clone()),
        (_, ElemLit::Poly(_)) => {
            return Err(Error::KindMismatch {
                expected: r.kind(),
                found: "polynomial",
            })
        }
    };
    r.check(&el)?;
    Ok(el)
}

fn elements(r: &Semiring, es: &[ElemLit]) -> Result<Vec<Element>> {
    es.iter().map(|e| element(r, e)).collect()
}

fn semiring(def: &SemiringDef) -> Result<Semiring> {
    Ok(match def {
        SemiringDef::NatPlus => Semiring::NatPlusTimes,
        SemiringDef::NatGcd => Semiring::NatGcdTimes,
        SemiringDef::NatPoly => Semiring::NatPoly,
        SemiringDef::Table { add, mul, zero, one } => {
            make_finite_semiring(add.clone(), mul.clone(), zero.unwrap_or(0), one.unwrap_or(1))?
        }
    })
}

fn mult_set(r: &Semiring, def: &MultDef) -> Result<MultSet> {
    match def {
        MultDef::Gens(g) => MultSet::new(r, &elements(r, g)?),
        MultDef::Odds => MultSet::odds(r),
    }
}

impl Env {
    fn ideal(&self, r: &Ref<Vec<ElemLit>>) -> Result<Ideal> {
        match r {
            Ref::Name(n) => lookup(&self.ideals, n),
            Ref::Inline { def, semiring } => {
                let r = lookup(&self.semirings, semiring)?;
                Ideal::new(&r, &elements(&r, def)?)
            }
        }
    }

    fn mult(&self, r: &Ref<MultDef>) -> Result<MultSet> {
        match r {
            Ref::Name(n) => lookup(&self.mults, n),
            Ref::Inline { def, semiring } => mult_set(&lookup(&self.semirings, semiring)?, def),
        }
    }
}

fn check(pred: &str, i: &Ideal, s: Option<&MultSet>, b: &Bounds) -> Result<Verdict> {
    let need = || s.ok_or_else(|| Error::PreconditionFailed(format!("{pred} needs a multiplicative set")));
    match pred {
        "prime" => classify::is_prime(i, b),
        "primary" => classify::is_primary(i, b),
        "k" => i.is_k_ideal(b),
        "s_prime" => classify::is_s_prime(i, need()?, b),
        "s_primary" => classify::is_s_primary(i, need()?, b),
        "s_k_primary" => classify::is_s_k_primary(i, need()?, b),
        "s_k_irreducible" => classify::is_s_k_irreducible(i, need()?, b),
        "s_k_maximal" => classify::is_s_k_maximal(i, need()?, b),
        other => Err(Error::Unsupported(format!("predicate {other}"))),
    }
}

/// What a query resolved to, for the report header.
#[derive(Default)]
struct Resolved {
    ideal: Option<Ideal>,
    mult: Option<MultSet>,
    element: Option<Element>,
}

fn run_query(env: &Env, q: &Query, cfg: &RunConfig, res: &mut Resolved) -> Result<Outcome> {
    let b = &cfg.bounds;
    let ideal = |r: &Ref<Vec<ElemLit>>, res: &mut Resolved| -> Result<Ideal> {
        let i = env.ideal(r)?;
        res.ideal = Some(i.clone());
        Ok(i)
    };
    let mult = |r: &Ref<MultDef>, res: &mut Resolved| -> Result<MultSet> {
        let s = env.mult(r)?;
        res.mult = Some(s.clone());
        Ok(s)
    };
    Ok(match q {
        Query::Check { pred, ideal: i, mult: m } => {
            let i = ideal(i, res)?;
            let s = m.as_ref().map(|m| mult(m, res)).transpose()?;
            Outcome::Verdict(check(pred, &i, s.as_ref(), b)?)
        }
        Query::Radical { ideal: i } => Outcome::ResultIdeal(ideal(i, res)?.radical()?),
        Query::SRadical { ideal: i, mult: m } => {
            let i = ideal(i, res)?;
            Outcome::ResultIdeal(i.s_radical(&mult(m, res)?)?)
        }
        Query::Colon { ideal: i, elem } => {
            let i = ideal(i, res)?;
            let x = element(i.ambient(), elem)?;
            res.element = Some(x.clone());
            Outcome::ResultIdeal(i.colon(&x)?)
        }
        Query::Member { ideal: i, elem } => {
            let i = ideal(i, res)?;
            let x = element(i.ambient(), elem)?;
            res.element = Some(x.clone());
            Outcome::Member(i.member(&x)?)
        }
        Query::Decompose { ideal: i, mult: m } => {
            let a = pisd::generator_of(&ideal(i, res)?)?;
            Outcome::Decomposition(pisd::s_primary_decompose(a, &mult(m, res)?)?)
        }
        Query::AssocPrimes { ideal: i, mult: m } => {
            let a = pisd::generator_of(&ideal(i, res)?)?;
            let ps = pisd::associated_primes_via_colon(a, &mult(m, res)?)?;
            Outcome::ResultIdeals(ps.into_iter().map(Ideal::gcd_ideal).collect())
        }
        Query::Lab { order } => {
            let order_cap = order.unwrap_or(DEFAULT_LAB_ORDER);
            let scope = lab::scope(order_cap, None)?;
            let reports = lab::run_all(
                &scope,
                &LabConfig {
                    order_cap,
                    ..LabConfig::default()
                },
            )?;
            Outcome::Lab(LabOutcome {
                order_cap,
                all_passed: !lab::any_violated(&reports),
                reports,
            })
        }
    })
}

/// Executes the statements in order. Declarations report only when they fail.
pub fn execute(script: &Script, cfg: &RunConfig) -> Vec<QueryReport> {
    let mut env = Env::default();
    let mut out = Vec::new();
    for stmt in &script.stmts {
        let report = |command: &'static str, res: Resolved, outcome: Outcome| QueryReport {
            line: stmt.line,
            column: stmt.column,
            command,
            statement: stmt.kind.to_string(),
            ideal: res.ideal.map(|i| i.to_string()),
            mult_set: res.mult.map(|s| s.to_string()),
            element: res.element.map(|x| x.to_string()),
            bounds: cfg.bounds,
            outcome,
        };
        let declared = match &stmt.kind {
            StmtKind::Semiring { name, def } => {
                let r = semiring(def);
                let e = r.as_ref().err().map(ToString::to_string);
                env.semirings.insert(name.clone(), r.map_err(|e| e.to_string()));
                e.map(|e| ("semiring", e))
            }
            StmtKind::MultSet { name, def, semiring } => {
                let s = lookup(&env.semirings, semiring).and_then(|r| mult_set(&r, def));
                let e = s.as_ref().err().map(ToString::to_string);
                env.mults.insert(name.clone(), s.map_err(|e| e.to_string()));
                e.map(|e| ("multset", e))
            }
            StmtKind::Ideal { name, gens, semiring } => {
                let i = lookup(&env.semirings, semiring).and_then(|r| Ideal::new(&r, &elements(&r, gens)?));
                let e = i.as_ref().err().map(ToString::to_string);
                env.ideals.insert(name.clone(), i.map_err(|e| e.to_string()));
                e.map(|e| ("ideal", e))
            }
            StmtKind::Query(q) => {
                let mut res = Resolved::default();
                let outcome = run_query(&env, q, cfg, &mut res).unwrap_or_else(|e| Outcome::Error(e.to_string()));
                out.push(report(q.command(), res, outcome));
                None
            }
        };
        if let Some((command, e)) = declared {
            out.push(report(command, Resolved::default(), Outcome::Error(e)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::script::parse;

    fn run(src: &str) -> String {
        render(&execute(&parse(src).unwrap(), &RunConfig::default()), false)
    }

    #[test]
    fn sradical_example() {
        let out = run("semiring R = nat_gcd\nmultset S = <2> in R\nideal I = (18) in R\nsradical I S\n");
        assert_eq!(out, "sradical (18) wrt <2> = (3)\n");
    }

    #[test]
    fn decompose_example() {
        let out = run("semiring R = nat_gcd\nmultset S = <3> in R\ndecompose (90) S\nassoc_primes (90) S");
        assert_eq!(
            out,
            "decompose (90) wrt <3>: components (18), (45); associated primes (2), (5); minimal=true\nassoc_primes (90) wrt <3> = (2), (5)\n"
        );
    }

    #[test]
    fn check_and_colon() {
        let out = run("semiring N = nat_plus\nideal A = (4, 6) in N\nmultset T = <3> in N\ncheck k A\ncheck s_primary A T\nsemiring G = nat_gcd\ncolon (12) 3");
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "check k (4, 6): Disproved [4, 2]");
        assert!(lines[1].starts_with("check s_primary (4, 6) wrt <3>: BoundedProof [3]"), "{}", lines[1]);
        assert_eq!(lines[2], "colon (12) by 3 = (4)");
    }

    #[test]
    fn errors_keep_going() {
        let reports = execute(
            &parse("semiring R = nat_gcd\nideal Z = (0) in R\nmultset S = <2> in R\ndecompose Z S\nradical Z").unwrap(),
            &RunConfig::default(),
        );
        assert_eq!(reports.len(), 2);
        assert!(reports[0].is_error());
        assert_eq!(reports[0].line, 4);
        assert!(!reports[1].is_error());
    }

    #[test]
    fn bad_table_is_reported() {
        let reports = execute(
            &parse("semiring B = table { add [[0,1],[1,0]] mul [[0,0],[0,0]] }\nideal I = (0) in B").unwrap(),
            &RunConfig::default(),
        );
        assert_eq!(reports.len(), 2);
        assert_eq!(reports[0].command, "semiring");
        assert!(reports.iter().all(QueryReport::is_error));
    }
}
