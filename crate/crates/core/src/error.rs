use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("malformed cycle string: {0}")]
    CycleSyntax(String),

    #[error("element is not a member of the group")]
    NotAMember,

    #[error("subgroup is not contained in the ambient group")]
    NotContained,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("group is not soluble")]
    NotSoluble,

    #[error("group is not a {p}-group")]
    NotPGroup { p: u64 },

    #[error("{what} needs {needed}, budget is {limit}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        limit: u128,
    },

    #[error("group order does not fit in 128 bits")]
    OrderOverflow,

    #[error("unsupported parameter: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("search exhausted: {0}")]
    SearchExhausted(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl GroupError {
    pub fn is_budget(&self) -> bool {
        matches!(self, GroupError::BudgetExceeded { .. } | GroupError::OrderOverflow)
    }
}

pub type Result<T> = std::result::Result<T, GroupError>;
