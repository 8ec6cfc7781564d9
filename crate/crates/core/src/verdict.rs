//! Three-valued answers for predicates that are only semi-decidable on
//! infinite carriers.

use std::fmt;

use serde::Serialize;

use crate::config::Bounds;
use crate::semiring::Element;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    Proved,
    Disproved,
    UnknownUpTo,
}

/// How far a verdict reaches, strongest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Scope {
    /// Every case was enumerated over a finite carrier or lattice.
    Exhaustive,
    /// Decided by a closed-form characterization.
    ClosedForm,
    /// Decided by an explicit witness that replays through the definition.
    Certificate,
    /// Only the cases inside the recorded bounds were examined.
    Bounded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub scope: Scope,
    /// Witness for `Proved`, counterexample for `Disproved`.
    pub witness: Vec<Element>,
    /// Why a verdict was reached when the witness alone does not say.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Bounds>,
}

impl Verdict {
    pub fn proved(scope: Scope, witness: Vec<Element>) -> Verdict {
        Verdict {
            status: Status::Proved,
            scope,
            witness,
            reason: None,
            bounds: None,
        }
    }

    pub fn disproved(scope: Scope, witness: Vec<Element>) -> Verdict {
        Verdict {
            status: Status::Disproved,
            scope,
            witness,
            reason: None,
            bounds: None,
        }
    }

    pub fn unknown(bounds: Bounds) -> Verdict {
        Verdict {
            status: Status::UnknownUpTo,
            scope: Scope::Bounded,
            witness: Vec::new(),
            reason: None,
            bounds: Some(bounds),
        }
    }

    /// A decided verdict from a boolean; the witness applies either way.
    pub fn decide(holds: bool, scope: Scope, witness: Vec<Element>) -> Verdict {
        if holds {
            Verdict::proved(scope, witness)
        } else {
            Verdict::disproved(scope, witness)
        }
    }

    pub fn with_reason(mut self, reason: impl Into<String>) -> Verdict {
        self.reason = Some(reason.into());
        self
    }

    /// Attaches bounds when the verdict depends on them.
    pub fn with_bounds(mut self, bounds: Bounds) -> Verdict {
        if self.scope == Scope::Bounded {
            self.bounds = Some(bounds);
        }
        self
    }

    pub fn is_proved(&self) -> bool {
        self.status == Status::Proved
    }

    pub fn is_disproved(&self) -> bool {
        self.status == Status::Disproved
    }

    /// Report label; bounded proofs are marked as such.
    pub fn label(&self) -> &'static str {
        match (self.status, self.scope) {
            (Status::Proved, Scope::Bounded) => "BoundedProof",
            (Status::Proved, _) => "Proved",
            (Status::Disproved, _) => "Disproved",
            (Status::UnknownUpTo, _) => "UnknownUpTo",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())?;
        if !self.witness.is_empty() {
            let parts: Vec<String> = self.witness.iter().map(ToString::to_string).collect();
            write!(f, " [{}]", parts.join(", "))?;
        }
        if let Some(reason) = &self.reason {
            write!(f, " ({reason})")?;
        }
        if let (Status::UnknownUpTo, Some(b)) = (self.status, &self.bounds) {
            write!(
                f,
                " elem<={} exp<={} rad<={}",
                b.elem_bound, b.exp_bound, b.rad_bound
            )?;
        }
        Ok(())
    }
}
