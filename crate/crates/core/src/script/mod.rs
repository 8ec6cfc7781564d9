//! The `semideal` input language: declarations of semirings, multiplicative
//! sets and ideals, followed by queries.
//!
//! ```text
//! semiring R = nat_gcd
//! multset S = <2> in R
//! ideal I = (18) in R
//! sradical I S
//! ```

mod exec;
mod parse;

use std::fmt;

use num_bigint::BigUint;

use crate::semiring::Poly;

pub use exec::{execute, render, LabOutcome, Outcome, QueryReport, RunConfig, DEFAULT_LAB_ORDER};
pub use parse::parse;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScriptError {
    #[error("{line}:{column}: expected {}, found {found}", .expected.join(" or "))]
    Parse {
        line: usize,
        column: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("{line}:{column}: {message}")]
    Name {
        line: usize,
        column: usize,
        name: String,
        message: String,
    },
}

/// Predicates accepted by `check`; the last five need a multiplicative set.
pub const CHECK_PREDICATES: [&str; 8] = crate::classify::PREDICATES;

pub fn needs_mult_set(pred: &str) -> bool {
    pred.starts_with("s_")
}

/// A numeral, or a polynomial in `x` of positive degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElemLit {
    Num(BigUint),
    Poly(Poly),
}

impl ElemLit {
    pub(crate) fn from_poly(p: Poly) -> ElemLit {
        match p.degree() {
            Some(d) if d >= 1 => ElemLit::Poly(p),
            _ => ElemLit::Num(p.coeffs().first().cloned().unwrap_or_default()),
        }
    }
}

impl fmt::Display for ElemLit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElemLit::Num(n) => write!(f, "{n}"),
            ElemLit::Poly(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemiringDef {
    NatPlus,
    NatGcd,
    NatPoly,
    Table {
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: Option<usize>,
        one: Option<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MultDef {
    Gens(Vec<ElemLit>),
    Odds,
}

/// An ideal or multiplicative set given by name or written inline. Inline
/// forms live in the most recently declared semiring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ref<T> {
    Name(String),
    Inline { def: T, semiring: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Query {
    Check {
        pred: String,
        ideal: Ref<Vec<ElemLit>>,
        mult: Option<Ref<MultDef>>,
    },
    Radical {
        ideal: Ref<Vec<ElemLit>>,
    },
    SRadical {
        ideal: Ref<Vec<ElemLit>>,
        mult: Ref<MultDef>,
    },
    Colon {
        ideal: Ref<Vec<ElemLit>>,
        elem: ElemLit,
    },
    Decompose {
        ideal: Ref<Vec<ElemLit>>,
        mult: Ref<MultDef>,
    },
    AssocPrimes {
        ideal: Ref<Vec<ElemLit>>,
        mult: Ref<MultDef>,
    },
    Member {
        ideal: Ref<Vec<ElemLit>>,
        elem: ElemLit,
    },
    Lab {
        order: Option<usize>,
    },
}

impl Query {
    pub fn command(&self) -> &'static str {
        match self {
            Query::Check { .. } => "check",
            Query::Radical { .. } => "radical",
            Query::SRadical { .. } => "sradical",
            Query::Colon { .. } => "colon",
            Query::Decompose { .. } => "decompose",
            Query::AssocPrimes { .. } => "assoc_primes",
            Query::Member { .. } => "member",
            Query::Lab { .. } => "lab",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StmtKind {
    Semiring { name: String, def: SemiringDef },
    MultSet { name: String, def: MultDef, semiring: String },
    Ideal { name: String, gens: Vec<ElemLit>, semiring: String },
    Query(Query),
}

/// A statement with the position of its first token. Equality ignores the
/// position, so a script equals its pretty-printed re-parse.
#[derive(Debug, Clone)]
pub struct Stmt {
    pub line: usize,
    pub column: usize,
    pub kind: StmtKind,
}

impl PartialEq for Stmt {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Stmt {}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Script {
    pub stmts: Vec<Stmt>,
}

fn join<T: fmt::Display>(xs: &[T], sep: &str) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn table(t: &[Vec<usize>]) -> String {
    let rows: Vec<String> = t.iter().map(|r| format!("[{}]", join(r, ","))).collect();
    format!("[{}]", rows.join(","))
}

impl fmt::Display for SemiringDef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemiringDef::NatPlus => write!(f, "nat_plus"),
            SemiringDef::NatGcd => write!(f, "nat_gcd"),
            SemiringDef::NatPoly => write!(f, "nat_poly"),
            SemiringDef::Table { add, mul, zero, one } => {
                write!(f, "table {{ add {} mul {}", table(add), table(mul))?;
                if let Some(z) = zero {
                    write!(f, " zero {z}")?;
                }
                if let Some(o) = one {
                    write!(f, " one {o}")?;
                }
                write!(f, " }}")
            }
        }
    }
}

impl fmt::Display for MultDef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MultDef::Gens(g) => write!(f, "<{}>", join(g, ",")),
            MultDef::Odds => write!(f, "odds"),
        }
    }
}

/// Written form of an ideal literal.
pub struct Gens<'a>(pub &'a [ElemLit]);

impl fmt::Display for Gens<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(self.0, ", "))
    }
}

impl fmt::Display for Ref<Vec<ElemLit>> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ref::Name(n) => write!(f, "{n}"),
            Ref::Inline { def, .. } => write!(f, "{}", Gens(def)),
        }
    }
}

impl fmt::Display for Ref<MultDef> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ref::Name(n) => write!(f, "{n}"),
            Ref::Inline { def, .. } => write!(f, "{def}"),
        }
    }
}

impl fmt::Display for Query {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.command();
        match self {
            Query::Check { pred, ideal, mult } => {
                write!(f, "check {pred} {ideal}")?;
                if let Some(m) = mult {
                    write!(f, " {m}")?;
                }
                Ok(())
            }
            Query::Radical { ideal } => write!(f, "{c} {ideal}"),
            Query::SRadical { ideal, mult } | Query::Decompose { ideal, mult } | Query::AssocPrimes { ideal, mult } => {
                write!(f, "{c} {ideal} {mult}")
            }
            Query::Colon { ideal, elem } | Query::Member { ideal, elem } => write!(f, "{c} {ideal} {elem}"),
            Query::Lab { order: None } => write!(f, "lab run"),
            Query::Lab { order: Some(n) } => write!(f, "lab run order<={n}"),
        }
    }
}

impl fmt::Display for StmtKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StmtKind::Semiring { name, def } => write!(f, "semiring {name} = {def}"),
            StmtKind::MultSet { name, def, semiring } => write!(f, "multset {name} = {def} in {semiring}"),
            StmtKind::Ideal { name, gens, semiring } => write!(f, "ideal {name} = {} in {semiring}", Gens(gens)),
            StmtKind::Query(q) => write!(f, "{q}"),
        }
    }
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.stmts {
            writeln!(f, "{}", s.kind)?;
        }
        Ok(())
    }
}
