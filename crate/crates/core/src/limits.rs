//! Process-wide resource limits.
//!
//! Limits are set once at start-up (the CLI does this from its flags) and
//! read everywhere else; computations never change them.

use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

pub const DEFAULT_ENUMERATION_BUDGET: u64 = 2_000_000;
pub const DEFAULT_QUOTIENT_DEGREE_BUDGET: u64 = 10_000;

static ENUMERATION_BUDGET: AtomicU64 = AtomicU64::new(DEFAULT_ENUMERATION_BUDGET);
static QUOTIENT_DEGREE_BUDGET: AtomicU64 = AtomicU64::new(DEFAULT_QUOTIENT_DEGREE_BUDGET);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub enumeration_budget: u64,
    pub quotient_degree_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration_budget: DEFAULT_ENUMERATION_BUDGET,
            quotient_degree_budget: DEFAULT_QUOTIENT_DEGREE_BUDGET,
        }
    }
}

impl Limits {
    pub fn current() -> Self {
        Limits {
            enumeration_budget: ENUMERATION_BUDGET.load(Ordering::Relaxed),
            quotient_degree_budget: QUOTIENT_DEGREE_BUDGET.load(Ordering::Relaxed),
        }
    }

    /// Installs these limits for the whole process. Zero budgets are rejected.
    pub fn install(self) -> Result<(), String> {
        if self.enumeration_budget == 0 || self.quotient_degree_budget == 0 {
            return Err("budgets must be positive".into());
        }
        ENUMERATION_BUDGET.store(self.enumeration_budget, Ordering::Relaxed);
        QUOTIENT_DEGREE_BUDGET.store(self.quotient_degree_budget, Ordering::Relaxed);
        Ok(())
    }
}

pub fn enumeration_budget() -> u64 {
    ENUMERATION_BUDGET.load(Ordering::Relaxed)
}

pub fn quotient_degree_budget() -> u64 {
    QUOTIENT_DEGREE_BUDGET.load(Ordering::Relaxed)
}
