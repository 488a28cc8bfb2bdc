//! The `InvolutionExample(s)` family: every coprime Sylow pair has
//! `pr ≥ 1/2` while `|G : F(G)| = 2^s` grows without bound.

use serde::{Deserialize, Serialize};

use crate::builders::{involution_example, GroupExpression, MAX_INVOLUTION_BLOCKS};
use crate::error::{GroupError, Result};
use crate::probability::{omega_from, omega_set, ratio, ExactRational};
use crate::structure::{fitting_subgroup, hall_p_complement_for, sylow_subgroup, HallMethod};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SylowPairRow {
    pub p: u64,
    pub q: u64,
    pub min: ExactRational,
    pub max: ExactRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HallPairRow {
    pub p: u64,
    pub hall_order: u128,
    pub method: HallMethod,
    /// largest `pr(P, H)` over the conjugates reached by the sweep
    pub max: ExactRational,
    pub min: ExactRational,
    /// `max ≥ 1/2`; when the complement came from the randomized search
    /// this is only a lower bound over all Hall subgroups
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Example44Report {
    pub s: usize,
    pub order: u128,
    pub fitting_order: u128,
    pub fitting_index: u128,
    pub sylow_pairs: Vec<SylowPairRow>,
    pub hall_pairs: Vec<HallPairRow>,
    pub sylow_pairs_ok: bool,
    pub index_ok: bool,
    pub hall_pairs_ok: bool,
}

impl Example44Report {
    pub fn passed(&self) -> bool {
        self.sylow_pairs_ok && self.index_ok && self.hall_pairs_ok
    }
}

pub fn example44_report(s: usize) -> Result<Example44Report> {
    if !(1..=MAX_INVOLUTION_BLOCKS).contains(&s) {
        return Err(GroupError::Precondition(format!("s = {s} out of range")));
    }
    let expr = GroupExpression::InvolutionExample(s);
    let g = involution_example(s)?;
    let half = ratio(1, 2);
    let primes = g.prime_divisors();

    let mut sylow_pairs = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            let om = omega_set(&g, p, q)?;
            sylow_pairs.push(SylowPairRow {
                p,
                q,
                min: om.min().clone(),
                max: om.max().clone(),
            });
        }
    }
    let sylow_pairs_ok = sylow_pairs.iter().all(|r| r.min >= half);

    let f = fitting_subgroup(&g)?;
    let fitting_index = g.order() / f.order();

    let mut hall_pairs = Vec::new();
    for &p in &primes {
        let sp = sylow_subgroup(&g, p)?;
        let hall = hall_p_complement_for(&expr, &g, p)?;
        // q = 0 labels the Hall side; only the values are used
        let om = omega_from(&g, p, &sp, 0, &hall.group)?;
        let max = om.max().clone();
        hall_pairs.push(HallPairRow {
            p,
            hall_order: hall.group.order(),
            method: hall.method,
            holds: max >= half,
            min: om.min().clone(),
            max,
        });
    }
    let hall_pairs_ok = hall_pairs.iter().all(|r| r.holds);

    Ok(Example44Report {
        s,
        order: g.order(),
        fitting_order: f.order(),
        fitting_index,
        sylow_pairs,
        hall_pairs,
        sylow_pairs_ok,
        index_ok: fitting_index == 1u128 << s,
        hall_pairs_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_block() {
        let r = example44_report(1).unwrap();
        assert_eq!((r.order, r.fitting_index), (6, 2));
        assert!(r.passed());
        assert_eq!(r.sylow_pairs[0].min, ratio(2, 3));
    }

    #[test]
    fn two_blocks_hall_pair_for_two_falls_below_half() {
        let r = example44_report(2).unwrap();
        assert!(r.sylow_pairs_ok && r.index_ok);
        assert_eq!(r.fitting_index, 4);
        let two = r.hall_pairs.iter().find(|h| h.p == 2).unwrap();
        // (3+1)/6 * (5+1)/10
        assert_eq!(two.max, ratio(2, 5));
        assert!(!r.hall_pairs_ok);
    }

    #[test]
    fn range_checked() {
        assert!(example44_report(0).is_err());
    }
}
