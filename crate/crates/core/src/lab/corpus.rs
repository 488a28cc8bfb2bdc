use serde::{Deserialize, Serialize};

use crate::builders::GroupExpression;
use crate::error::{GroupError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub label: String,
    pub expr: GroupExpression,
}

impl CorpusEntry {
    pub fn new(expr: GroupExpression) -> Self {
        CorpusEntry {
            label: expr.to_string(),
            expr,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(CorpusEntry::new(GroupExpression::parse(s)?))
    }
}

/// The standard corpus; `Sp62` is appended only when `include_stretch`.
pub fn builtin_corpus(include_stretch: bool) -> Vec<CorpusEntry> {
    use GroupExpression as E;
    let mut exprs = Vec::new();
    exprs.extend((3..=6).map(E::Sym));
    exprs.extend((4..=6).map(E::Alt));
    exprs.extend([6, 12, 30].map(E::Cyclic));
    exprs.extend((4..=15).map(E::Dihedral));
    exprs.extend([4, 5, 7, 8, 9, 11, 13].map(E::Psl2));
    for t in 1..=3 {
        exprs.push(E::DirectProduct(vec![E::Sym(5), E::Power(Box::new(E::Sym(3)), t)]));
    }
    exprs.extend((1..=5).map(E::InvolutionExample));
    exprs.push(E::DirectProduct(vec![E::Alt(5), E::Cyclic(6)]));
    if include_stretch {
        exprs.push(E::Sp62);
    }
    exprs.into_iter().map(CorpusEntry::new).collect()
}

/// Reads a JSON array of `{"label": ..., "expr": ...}`.
pub fn parse_corpus(json: &str) -> Result<Vec<CorpusEntry>> {
    serde_json::from_str(json).map_err(|e| GroupError::Parse(format!("corpus: {e}")))
}
