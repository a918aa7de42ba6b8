//! Enumeration budgets.
//!
//! Every potentially explosive enumeration takes a [`Budget`]. The environment
//! variable `LIEPAR_BUDGET` overrides the element and weight budgets.

pub const BUDGET_ENV: &str = "LIEPAR_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of Weyl group elements materialized.
    pub elements: usize,
    /// Maximum number of weights (counted with orbit expansion) in a weight system.
    pub weights: usize,
    /// Largest `d` for which Specht modules of `S_d` are built.
    pub specht_degree: usize,
    /// Longest tensor word tried by the generation-certificate search.
    pub certificate_depth: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            elements: 10_000_000,
            weights: 2_000_000,
            specht_degree: 8,
            certificate_depth: 6,
        }
    }
}

impl Budget {
    /// Default budget with `LIEPAR_BUDGET` applied, if set and parseable.
    pub fn from_env() -> Self {
        let mut budget = Budget::default();
        if let Some(limit) = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            budget.elements = limit;
            budget.weights = limit;
        }
        budget
    }

    pub fn with_elements(mut self, elements: usize) -> Self {
        self.elements = elements;
        self
    }
}
