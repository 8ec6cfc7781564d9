//! Exact ideal theory in commutative semirings.
//!
//! Finite semirings given by operation tables are handled exhaustively;
//! the built-in carriers `(N0, +, ·)`, `(N0, gcd, ·)` and `N[x]` use closed
//! forms where they exist and bounded searches otherwise, with every answer
//! reported as a [`Verdict`].

pub mod arith;
pub mod classify;
pub mod config;
pub mod error;
pub mod ideal;
pub mod lab;
pub mod multset;
pub mod pisd;
pub mod script;
pub mod semiring;
pub mod verdict;

pub use config::Bounds;
pub use error::{Error, Result};
pub use ideal::{ideal, Ideal};
pub use multset::{mult_set, MultSet};
pub use semiring::{make_finite_semiring, Element, FiniteSemiring, Poly, Semiring, SemiringKind};
pub use verdict::{Scope, Status, Verdict};
