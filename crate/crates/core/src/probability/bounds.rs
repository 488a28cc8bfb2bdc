//! Closed forms, upper bounds and inequalities satisfied by `pr`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::builders::DirectProduct;
use crate::error::{GroupError, Result};
use crate::group::PermutationGroup;
use crate::perm::Permutation;
use crate::primes::prime_power;
use crate::structure::quotient_group;

use super::{class_size_under, pr, ratio, ExactRational};

/// `(a + b - 1) / (ab)`: the value of `pr(P, Q)` for Sylow subgroups of
/// orders `a = p^α`, `b = q^β` when no element has order `pq`.
pub fn pr_no_pq_formula(a: u128, b: u128) -> Result<ExactRational> {
    let base = |n: u128| -> Result<Option<u64>> {
        if n == 1 {
            return Ok(None);
        }
        let n64 = u64::try_from(n).map_err(|_| GroupError::Unsupported(format!("{n} too large")))?;
        prime_power(n64)
            .map(|(p, _)| Some(p))
            .ok_or_else(|| GroupError::Precondition(format!("{n} is not a prime power")))
    };
    let (pa, pb) = (base(a)?, base(b)?);
    if pa.is_some() && pa == pb {
        return Err(GroupError::Precondition(format!("{a} and {b} share a prime")));
    }
    Ok(ratio(a + b - 1, a * b))
}

/// `(n + m - 1) / (nm)` with `n = |H : C_H(K)|` and `m` the least
/// `|K : C_K(x)|` over `x ∈ H \ C_H(K)`; 1 when `K` centralizes `H`.
pub fn lemma24_bound(h: &PermutationGroup, k: &PermutationGroup) -> Result<ExactRational> {
    if h.degree() != k.degree() {
        return Err(GroupError::DegreeMismatch {
            expected: h.degree(),
            found: k.degree(),
        });
    }
    let c = h.centralizer_of_set(k.generators())?;
    let n = h.order() / c.order();
    if n == 1 {
        return Ok(ExactRational::one());
    }
    let m = h
        .iter()?
        .filter(|x| !c.has(x))
        .map(|x| class_size_under(&x, k) as u128)
        .min()
        .expect("H is larger than C_H(K)");
    Ok(ratio(n + m - 1, n * m))
}

/// `(p^a + q - 1) / (p^a q)`, an upper bound for `pr(P, Q)` whenever
/// `|P : C_P(Q)| ≥ p^a`.
pub fn centralizer_index_bound(p: u64, a: u32, q: u64) -> ExactRational {
    let pa = (p as u128).pow(a);
    ratio(pa + q as u128 - 1, pa * q as u128)
}

/// `((x+1) + y - 1) / ((x+1) y) ≤ (x + y - 1) / (xy)`.
pub fn xy_inequality_check(x: u64, y: u64) -> bool {
    assert!(x >= 1 && y >= 1, "x and y must be positive");
    let (x, y) = (x as u128, y as u128);
    ratio(x + y, (x + 1) * y) <= ratio(x + y - 1, x * y)
}

#[derive(Clone, Debug, Serialize)]
pub struct H0Report {
    /// `{x ∈ H : |x^K| ≤ 2/ε}`, in enumeration order
    #[serde(skip)]
    pub x: Vec<Permutation>,
    #[serde(skip)]
    pub h0: PermutationGroup,
    pub x_size: usize,
    pub h0_order: u128,
    pub index: u128,
    pub index_bound: ExactRational,
    pub max_class_size_on_x: u128,
    pub max_class_size_on_h0: u128,
    /// `(2/ε)^⌈6/ε⌉`
    #[serde(serialize_with = "as_decimal")]
    pub h0_class_bound: BigInt,
}

fn as_decimal<S: Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(n)
}

/// Builds `X = {x ∈ H : |x^K| ≤ 2/ε}` and `H₀ = ⟨X⟩`, then checks
/// `|H : H₀| ≤ 2/ε - 1`, `|x^K| ≤ 2/ε` on `X` and
/// `|x^K| ≤ (2/ε)^⌈6/ε⌉` on `H₀`.
pub fn build_h0(h: &PermutationGroup, k: &PermutationGroup, eps: &ExactRational) -> Result<H0Report> {
    if !eps.is_positive() || eps > &ExactRational::one() {
        return Err(GroupError::Precondition(format!("eps = {eps} must lie in (0, 1]")));
    }
    let p = pr(h, k)?;
    if &p < eps {
        return Err(GroupError::Precondition(format!("pr(H, K) = {p} is below eps = {eps}")));
    }
    let two_over = &ratio(2, 1) / eps;
    let within = |size: u128| ExactRational::from_integer(size) <= two_over;
    let mut x = Vec::new();
    let mut max_x = 0u128;
    for y in h.iter()? {
        let s = class_size_under(&y, k) as u128;
        if within(s) {
            max_x = max_x.max(s);
            x.push(y);
        }
    }
    let h0 = PermutationGroup::generated(h.degree(), &x)?;
    let index = h.order() / h0.order();
    let index_bound = &two_over - &ExactRational::one();
    let exponent = (&ratio(6, 1) / eps).ceil().to_u32().ok_or(GroupError::OrderOverflow)?;
    let h0_class_bound =
        num_traits::Pow::pow(two_over.numer(), exponent) / num_traits::Pow::pow(two_over.denom(), exponent);
    let max_h0 = h0.iter()?.map(|y| class_size_under(&y, k) as u128).max().unwrap_or(1);
    if ExactRational::from_integer(index) > index_bound {
        return Err(GroupError::Inconsistent(format!(
            "|H:H0| = {index} exceeds {index_bound}"
        )));
    }
    if BigInt::from(max_h0) > h0_class_bound {
        return Err(GroupError::Inconsistent(format!(
            "class size {max_h0} on H0 exceeds bound"
        )));
    }
    Ok(H0Report {
        x_size: x.len(),
        h0_order: h0.order(),
        x,
        h0,
        index,
        index_bound,
        max_class_size_on_x: max_x,
        max_class_size_on_h0: max_h0,
        h0_class_bound,
    })
}

/// `pr(H, K) ≤ pr(HN/N, KN/N) · pr(N ∩ H, N ∩ K)`.
pub fn check_quotient_inequality(
    g: &PermutationGroup,
    n: &PermutationGroup,
    h: &PermutationGroup,
    k: &PermutationGroup,
) -> Result<bool> {
    let q = quotient_group(g, n)?;
    let lhs = pr(h, k)?;
    let top = pr(&q.image_subgroup(h)?, &q.image_subgroup(k)?)?;
    let bottom = pr(&n.intersection(h)?, &n.intersection(k)?)?;
    Ok(lhs <= &top * &bottom)
}

/// `pr(H₁ × H₂, K₁ × K₂) = pr(H₁, K₁) · pr(H₂, K₂)` inside `G₁ × G₂`.
pub fn check_product_rule(
    g1: &PermutationGroup,
    g2: &PermutationGroup,
    h1: &PermutationGroup,
    h2: &PermutationGroup,
    k1: &PermutationGroup,
    k2: &PermutationGroup,
) -> Result<bool> {
    for (sub, amb) in [(h1, g1), (k1, g1), (h2, g2), (k2, g2)] {
        if !sub.is_subgroup_of(amb) {
            return Err(GroupError::NotContained);
        }
    }
    let dp = DirectProduct::new(&[g1.clone(), g2.clone()])?;
    let h = dp.product_of(&[h1.clone(), h2.clone()])?;
    let k = dp.product_of(&[k1.clone(), k2.clone()])?;
    Ok(pr(&h, &k)? == &pr(h1, k1)? * &pr(h2, k2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build, GroupExpression};
    use crate::structure::{p_core, sylow_subgroup};

    fn g(s: &str) -> PermutationGroup {
        build(&GroupExpression::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn no_pq_formula() {
        assert_eq!(pr_no_pq_formula(4, 5).unwrap(), ratio(2, 5));
        assert_eq!(pr_no_pq_formula(8, 9).unwrap(), ratio(2, 9));
        assert_eq!(pr_no_pq_formula(27, 1).unwrap(), ratio(1, 1));
        assert!(pr_no_pq_formula(4, 8).is_err());
        assert!(pr_no_pq_formula(6, 5).is_err());
    }

    #[test]
    fn lemma24_examples() {
        let s3 = g("Sym(3)");
        let p2 = sylow_subgroup(&s3, 2).unwrap();
        let p3 = sylow_subgroup(&s3, 3).unwrap();
        assert_eq!(lemma24_bound(&p2, &p3).unwrap(), ratio(2, 3));
        let a5 = g("Alt(5)");
        let q2 = sylow_subgroup(&a5, 2).unwrap();
        let q5 = sylow_subgroup(&a5, 5).unwrap();
        assert_eq!(lemma24_bound(&q2, &q5).unwrap(), ratio(2, 5));
        let c = g("C(6)");
        assert_eq!(lemma24_bound(&c, &c).unwrap(), ratio(1, 1));
    }

    #[test]
    fn xy_grid_examples() {
        assert!(xy_inequality_check(1, 1));
        assert!(xy_inequality_check(2, 3));
        assert!(xy_inequality_check(100, 100));
    }

    #[test]
    fn h0_examples() {
        let a5 = g("Alt(5)");
        let p2 = sylow_subgroup(&a5, 2).unwrap();
        let p3 = sylow_subgroup(&a5, 3).unwrap();
        let r = build_h0(&p2, &p3, &ratio(1, 2)).unwrap();
        assert_eq!(r.x_size, 4);
        assert_eq!(r.index, 1);
        let s3 = g("Sym(3)");
        let r = build_h0(
            &sylow_subgroup(&s3, 2).unwrap(),
            &sylow_subgroup(&s3, 3).unwrap(),
            &ratio(2, 3),
        )
        .unwrap();
        assert_eq!((r.x_size, r.index), (2, 1));
        let c = g("C(6)");
        let r = build_h0(&c, &c, &ratio(1, 1)).unwrap();
        assert_eq!(r.h0_order, 6);
        assert!(build_h0(&p2, &p3, &ratio(3, 4)).is_err());
    }

    #[test]
    fn quotient_and_product_checks() {
        let s4 = g("Sym(4)");
        let v4 = p_core(&s4, 2).unwrap();
        let p2 = sylow_subgroup(&s4, 2).unwrap();
        let p3 = sylow_subgroup(&s4, 3).unwrap();
        assert!(check_quotient_inequality(&s4, &v4, &p2, &p3).unwrap());
        assert!(check_quotient_inequality(&s4, &s4, &p2, &p3).unwrap());
        let one = PermutationGroup::trivial(4);
        assert!(check_quotient_inequality(&s4, &one, &p2, &p3).unwrap());
        let s3 = g("Sym(3)");
        let t2 = sylow_subgroup(&s3, 2).unwrap();
        let t3 = sylow_subgroup(&s3, 3).unwrap();
        assert!(check_product_rule(&s4, &s3, &p2, &t2, &p3, &t3).unwrap());
        let triv = PermutationGroup::trivial(3);
        assert!(check_product_rule(&s4, &s3, &p2, &triv, &p3, &triv).unwrap());
    }
}
