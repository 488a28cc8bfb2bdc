//! Large primes force commuting: if `pr(P, Q) ≥ ε` and
//! `p > (2/ε)^⌈6/ε⌉` then `P` centralizes `Q` when it normalizes it, and in
//! any case centralizes a normal subgroup of `Q` of index at most
//! `⌊2/ε⌋!`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::error::{GroupError, Result};
use crate::group::{normalizes, PermutationGroup};
use crate::probability::{pr, ratio, ExactRational};

use super::implications::Verdict;

/// `(2/ε)^⌈6/ε⌉`
pub fn large_prime_bound(eps: &ExactRational) -> Result<ExactRational> {
    let e = (&ratio(6, 1) / eps).ceil().to_u32().ok_or(GroupError::OrderOverflow)?;
    Ok((&ratio(2, 1) / eps).pow(e))
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn lemma27_check(
    g: &PermutationGroup,
    p_sub: &PermutationGroup,
    q_sub: &PermutationGroup,
    eps: &ExactRational,
) -> Result<Verdict> {
    if !eps.is_positive() || eps > &ExactRational::one() {
        return Err(GroupError::Precondition(format!("eps = {eps} must lie in (0, 1]")));
    }
    if !p_sub.is_subgroup_of(g) || !q_sub.is_subgroup_of(g) {
        return Err(GroupError::NotContained);
    }
    let p = match p_sub.prime_divisors()[..] {
        [p] => p,
        _ => return Err(GroupError::Precondition("P must be a nontrivial p-group".into())),
    };
    match q_sub.prime_divisors()[..] {
        [q] if q != p => {}
        _ => {
            return Err(GroupError::Precondition(
                "Q must be a nontrivial q-group, q != p".into(),
            ))
        }
    }
    let value = pr(p_sub, q_sub)?;
    if &value < eps {
        return Err(GroupError::Precondition(format!(
            "pr(P, Q) = {value} is below eps = {eps}"
        )));
    }

    let bound = large_prime_bound(eps)?;
    let centralizes = |h: &PermutationGroup| {
        p_sub
            .generators()
            .iter()
            .all(|x| h.generators().iter().all(|y| x.commutes_with(y)))
    };
    let normalizing = p_sub.generators().iter().all(|x| normalizes(x, q_sub));
    let part1 = !normalizing || centralizes(q_sub);
    // the largest normal subgroup of Q centralized by P
    let q0 = q_sub.centralizer_of_set(p_sub.generators())?.core_in(q_sub)?;
    let limit = factorial((&ratio(2, 1) / eps).floor().to_u64().ok_or(GroupError::OrderOverflow)?);
    let part2 = BigInt::from(q_sub.order() / q0.order()) <= limit;

    let note = format!(
        "P normalizes Q: {normalizing}; |Q:Q0| = {}; pr(P,Q) = {value}",
        q_sub.order() / q0.order()
    );
    Ok(Verdict::new(
        &format!("degree {} group of order {}", g.degree(), g.order()),
        "L2.7",
        ExactRational::from_integer(p as u128),
        bound,
        part1 && part2,
        Some(note),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build, GroupExpression};
    use crate::lab::VerdictStatus;
    use crate::structure::sylow_subgroup;

    fn g(s: &str) -> PermutationGroup {
        build(&GroupExpression::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn small_primes_are_vacuous() {
        let s3 = g("Sym(3)");
        let p2 = sylow_subgroup(&s3, 2).unwrap();
        let p3 = sylow_subgroup(&s3, 3).unwrap();
        let v = lemma27_check(&s3, &p3, &p2, &ratio(1, 2)).unwrap();
        assert_eq!(v.status, VerdictStatus::Vacuous);
        assert_eq!(v.threshold, ExactRational::from_integer(4u128.pow(12)));
        let v = lemma27_check(&s3, &p2, &p3, &ratio(1, 2)).unwrap();
        assert_eq!(v.status, VerdictStatus::Vacuous);
        assert!(lemma27_check(&s3, &p2, &p3, &ratio(3, 4)).is_err());
    }

    #[test]
    fn commuting_large_prime_confirms() {
        let c = g("C(134)");
        let p67 = sylow_subgroup(&c, 67).unwrap();
        let p2 = sylow_subgroup(&c, 2).unwrap();
        let v = lemma27_check(&c, &p67, &p2, &ratio(1, 1)).unwrap();
        assert_eq!(v.threshold, ratio(64, 1));
        assert_eq!(v.status, VerdictStatus::Confirmed);
        let v = lemma27_check(&c, &p2, &p67, &ratio(1, 1)).unwrap();
        assert_eq!(v.status, VerdictStatus::Vacuous);
        assert!(v.conclusion_holds);
    }
}
