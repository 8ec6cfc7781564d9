use thiserror::Error;

use crate::semiring::SemiringKind;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A semiring axiom failed on the given element indices.
    #[error("axiom violation: {axiom} fails at {witness:?}")]
    AxiomViolation {
        axiom: &'static str,
        witness: Vec<usize>,
    },

    #[error("malformed operation table: {0}")]
    MalformedTable(String),

    #[error("order {order} exceeds the configured cap {cap}")]
    OrderCap { order: usize, cap: usize },

    #[error("element of kind {found} does not belong to a {expected} semiring")]
    KindMismatch {
        expected: SemiringKind,
        found: &'static str,
    },

    #[error("operands live in different semirings")]
    AmbientMismatch,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("an ideal needs at least one generator")]
    EmptyGenerators,

    #[error("the multiplicative set would contain zero")]
    ZeroInSet,

    #[error("the ideal is the whole semiring")]
    UnitIdeal,

    #[error("zero is not a valid input here")]
    ZeroInput,

    #[error("{0} exceeds the 64-bit factorization cap")]
    Overflow(String),

    #[error("the ideal meets the multiplicative set")]
    NotDisjoint,

    #[error("the ideal is not a k-ideal")]
    NotKIdeal,

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("time budget of {0:?} exhausted")]
    TimeBudget(std::time::Duration),
}
