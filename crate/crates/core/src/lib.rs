//! Finite permutation groups, their Sylow structure, and exact commuting
//! probabilities between Sylow subgroups.
//!
//! Products are read left to right throughout: `x * y` applies `x` first.

pub mod builders;
mod chain;
pub mod error;
pub mod group;
pub mod lab;
pub mod limits;
pub mod par;
pub mod perm;
pub mod primes;
pub mod probability;
pub mod structure;
pub mod sweep;

pub use builders::{build, GroupExpression};
pub use error::{GroupError, Result};
pub use group::{PermutationGroup, SubgroupHandle};
pub use perm::Permutation;
pub use probability::{ExactRational, PrimeSet};
