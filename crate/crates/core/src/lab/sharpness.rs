//! Groups sitting exactly on a threshold, plus the numeric anchors used
//! for PSL(2,7), PSL(2,8) and Alt(6).

use serde::{Deserialize, Serialize};

use crate::builders::{alternating, psl2, symmetric};
use crate::error::Result;
use crate::group::PermutationGroup;
use crate::probability::{omega_set, pr_star, ratio, ExactRational, PrimeSet};
use crate::structure::{is_nilpotent, is_soluble};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharpnessItem {
    pub name: String,
    pub expected: ExactRational,
    pub computed: ExactRational,
    /// the structural side condition, if the item has one
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub condition: Option<String>,
    pub condition_holds: bool,
    pub ok: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharpnessReport {
    pub items: Vec<SharpnessItem>,
}

impl SharpnessReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &SharpnessItem> {
        self.items.iter().filter(|i| !i.ok)
    }

    pub fn passed(&self) -> bool {
        self.mismatches().next().is_none()
    }

    pub fn get(&self, name: &str) -> Option<&SharpnessItem> {
        self.items.iter().find(|i| i.name == name)
    }
}

fn item(
    name: &str,
    expected: ExactRational,
    computed: ExactRational,
    condition: Option<(&str, bool)>,
) -> SharpnessItem {
    let condition_holds = condition.is_none_or(|c| c.1);
    SharpnessItem {
        name: name.into(),
        ok: expected == computed && condition_holds,
        expected,
        computed,
        condition: condition.map(|c| c.0.to_string()),
        condition_holds,
    }
}

fn star(g: &PermutationGroup, a: &str, b: &str) -> Result<ExactRational> {
    Ok(pr_star(g, &PrimeSet::parse(a)?, &PrimeSet::parse(b)?)?.value)
}

/// Common value of `pr(P₂, P₃)` over all Sylow pairs, or the largest one
/// when they differ (then `all_equal` is false).
fn uniform_23(g: &PermutationGroup) -> Result<(ExactRational, bool)> {
    let om = omega_set(g, 2, 3)?;
    Ok((om.max().clone(), om.values.len() == 1))
}

pub fn sharpness_witnesses() -> Result<SharpnessReport> {
    let s3 = symmetric(3)?;
    let a5 = alternating(5)?;
    let a6 = alternating(6)?;
    let l27 = psl2(7)?;
    let l28 = psl2(8)?;
    let mut items = vec![
        item(
            "pr*(Sym(3))",
            ratio(2, 3),
            star(&s3, "*", "*")?,
            Some(("Sym(3) is not nilpotent", !is_nilpotent(&s3)?)),
        ),
        item(
            "pr*(Alt(5))",
            ratio(2, 5),
            star(&a5, "*", "*")?,
            Some(("Alt(5) is not soluble", !is_soluble(&a5)?)),
        ),
        item("pr*_Alt(5)(2',2')", ratio(7, 15), star(&a5, "2'", "2'")?, None),
        item("pr*_Alt(5)(2,2')", ratio(2, 5), star(&a5, "2", "2'")?, None),
        item("pr*_Alt(5)(2,5')", ratio(1, 2), star(&a5, "2", "5'")?, None),
        item(
            "pr*_PSL2(7)(2,7')",
            ratio(5, 12),
            star(&l27, "2", "7'")?,
            Some(("PSL2(7) is not soluble", !is_soluble(&l27)?)),
        ),
        item("pr*_Alt(5)(2,3')", ratio(2, 5), star(&a5, "2", "3'")?, None),
    ];
    for (name, g) in [("PSL2(7)", &l27), ("PSL2(8)", &l28), ("Alt(6)", &a6)] {
        let expected = if name == "PSL2(7)" { ratio(5, 12) } else { ratio(2, 9) };
        let (v, uniform) = uniform_23(g)?;
        items.push(item(
            &format!("pr(P2,P3) in {name}"),
            expected,
            v,
            Some(("same value for every Sylow pair", uniform)),
        ));
    }
    Ok(SharpnessReport { items })
}
