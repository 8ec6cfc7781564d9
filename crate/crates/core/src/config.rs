//! Search bounds and size caps shared by every bounded checker.

use serde::Serialize;

/// Largest finite semiring accepted by [`crate::semiring::FiniteSemiring::new`].
pub const DEFAULT_ORDER_CAP: usize = 12;

/// Bounds for semi-decidable searches over the infinite built-in semirings.
///
/// Every report echoes the bounds it was produced under, so a bounded
/// result can always be reproduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// Elements `0..=elem_bound` form the probe universe for quantified searches.
    pub elem_bound: u64,
    /// Each generator of a multiplicative set is raised to at most this power
    /// when building the S-ball.
    pub exp_bound: u32,
    /// Largest exponent `n` tried when testing `x^n ∈ I`.
    pub rad_bound: u32,
    /// Degree cap for polynomial multipliers in `N[x]` searches.
    pub poly_degree: usize,
    /// Coefficient cap for polynomial multipliers in `N[x]` searches.
    pub poly_coeff: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            elem_bound: 200,
            exp_bound: 8,
            rad_bound: 16,
            poly_degree: 2,
            poly_coeff: 3,
        }
    }
}

impl Bounds {
    pub fn with_elem_bound(mut self, elem_bound: u64) -> Self {
        self.elem_bound = elem_bound;
        self
    }

    pub fn with_exp_bound(mut self, exp_bound: u32) -> Self {
        self.exp_bound = exp_bound;
        self
    }

    pub fn with_rad_bound(mut self, rad_bound: u32) -> Self {
        self.rad_bound = rad_bound;
        self
    }
}
