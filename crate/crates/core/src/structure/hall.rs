//! Hall `p'`-subgroups of soluble groups.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::builders::{hall_complement_by_construction, GroupExpression};
use crate::error::{GroupError, Result};
use crate::group::PermutationGroup;

use super::{is_nilpotent, is_soluble, p_prime_part_element, sylow_subgroup};

const RANDOM_GENERATORS: usize = 20;
const RANDOM_RETRIES: usize = 500;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HallMethod {
    /// read off the group's construction
    Construction,
    /// forced by the prime divisors (Sylow subgroups suffice)
    Sylow,
    /// found by the randomized search
    Randomized,
}

#[derive(Clone, Debug)]
pub struct HallComplement {
    pub group: PermutationGroup,
    pub method: HallMethod,
}

/// Prefers the construction of `expr` when it offers one.
pub fn hall_p_complement_for(expr: &GroupExpression, g: &PermutationGroup, p: u64) -> Result<HallComplement> {
    if let Some(h) = hall_complement_by_construction(expr, p)? {
        if h.is_subgroup_of(g) && h.order() == g.order() / g.p_part(p) {
            return Ok(HallComplement {
                group: h,
                method: HallMethod::Construction,
            });
        }
    }
    hall_p_complement(g, p)
}

pub fn hall_p_complement(g: &PermutationGroup, p: u64) -> Result<HallComplement> {
    if !is_soluble(g)? {
        return Err(GroupError::NotSoluble);
    }
    let target = g.order() / g.p_part(p);
    if target == g.order() {
        return Ok(HallComplement {
            group: g.clone(),
            method: HallMethod::Sylow,
        });
    }
    let others: Vec<u64> = g.prime_divisors().into_iter().filter(|&q| q != p).collect();
    if others.len() <= 1 || is_nilpotent(g)? {
        let mut h = PermutationGroup::trivial(g.degree());
        for q in others {
            h = h.join(&sylow_subgroup(g, q)?)?;
        }
        if h.order() == target {
            return Ok(HallComplement {
                group: h,
                method: HallMethod::Sylow,
            });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x4841_4c4c ^ p);
    for _ in 0..RANDOM_RETRIES {
        let mut h = PermutationGroup::trivial(g.degree());
        for _ in 0..RANDOM_GENERATORS {
            let x = p_prime_part_element(&g.random_element(&mut rng), p);
            if h.has(&x) {
                continue;
            }
            let cand = h.join_elements(&[x])?;
            if cand.p_part(p) == 1 {
                h = cand;
                if h.order() == target {
                    return Ok(HallComplement {
                        group: h,
                        method: HallMethod::Randomized,
                    });
                }
            }
        }
    }
    Err(GroupError::SearchExhausted(format!(
        "no Hall {p}'-subgroup after {RANDOM_RETRIES} randomized attempts"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::build;

    fn e(s: &str) -> GroupExpression {
        GroupExpression::parse(s).unwrap()
    }

    #[test]
    fn small_complements() {
        let s4 = build(&e("Sym(4)")).unwrap();
        assert_eq!(hall_p_complement(&s4, 2).unwrap().group.order(), 3);
        assert_eq!(hall_p_complement(&s4, 3).unwrap().group.order(), 8);
        assert_eq!(hall_p_complement(&s4, 5).unwrap().group.order(), 24);
        let a5 = build(&e("Alt(5)")).unwrap();
        assert!(matches!(hall_p_complement(&a5, 2), Err(GroupError::NotSoluble)));
    }

    #[test]
    fn construction_aware() {
        let ex = e("InvolutionExample(2)");
        let g = build(&ex).unwrap();
        let h = hall_p_complement_for(&ex, &g, 3).unwrap();
        assert_eq!(h.group.order(), 20);
        assert_eq!(h.method, HallMethod::Construction);
        let h2 = hall_p_complement_for(&ex, &g, 2).unwrap();
        assert_eq!(h2.group.order(), 15);
        let prod = e("D(6) * C(10)");
        let gp = build(&prod).unwrap();
        for p in [2, 3, 5, 7] {
            let h = hall_p_complement_for(&prod, &gp, p).unwrap();
            assert_eq!(h.group.order(), gp.order() / gp.p_part(p), "p = {p}");
        }
    }

    #[test]
    fn randomized_search_finds_three_prime_complements() {
        // Sym(4) x C(5) has three primes and is not nilpotent
        let g = build(&e("Sym(4) * C(5)")).unwrap();
        let h = hall_p_complement(&g, 3).unwrap();
        assert_eq!(h.group.order(), 40);
        assert_eq!(h.method, HallMethod::Randomized);
    }
}
