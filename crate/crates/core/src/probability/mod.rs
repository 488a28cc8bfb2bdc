//! Exact commuting probabilities between subgroups, the sets `Ω_{p,q}` and
//! the invariant `pr*`.
//!
//! `pr(X, Y)` is the fraction of pairs `(x, y) ∈ X × Y` with `xy = yx`.
//! Every call for subgroups counts the commuting pairs twice: directly, and
//! as `Σ_{x ∈ X} |Y| / |x^Y|` from conjugacy-orbit sizes. The two counts
//! must agree exactly.

mod bounds;
mod primeset;
mod rational;

pub use bounds::{
    build_h0, centralizer_index_bound, check_product_rule, check_quotient_inequality, lemma24_bound, pr_no_pq_formula,
    xy_inequality_check, H0Report,
};
pub use primeset::PrimeSet;
pub use rational::{ratio, ExactRational};

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{GroupError, Result};
use crate::group::PermutationGroup;
use crate::par;
use crate::perm::Permutation;
use crate::structure::sylow_subgroup;
use crate::sweep::{smaller_orbit, Side};

fn check_degrees(x: &PermutationGroup, y: &PermutationGroup) -> Result<()> {
    if x.degree() != y.degree() {
        return Err(GroupError::DegreeMismatch {
            expected: x.degree(),
            found: y.degree(),
        });
    }
    Ok(())
}

/// Size of the orbit of `x` under conjugation by `k`, i.e. `|k : C_k(x)|`.
pub fn class_size_under(x: &Permutation, k: &PermutationGroup) -> usize {
    let mut seen = HashSet::new();
    seen.insert(x.clone());
    let mut queue = vec![x.clone()];
    while let Some(y) = queue.pop() {
        for g in k.generators() {
            let z = y.conjugate_by(g);
            if seen.insert(z.clone()) {
                queue.push(z);
            }
        }
    }
    seen.len()
}

/// Commuting pairs counted directly over `xs × ys`.
pub fn commuting_pairs_direct(xs: &[Permutation], ys: &[Permutation]) -> u128 {
    par::map_slice(xs, |x| ys.iter().filter(|y| x.commutes_with(y)).count() as u128)
        .into_iter()
        .sum()
}

/// Commuting pairs in `X × Y` counted as `Σ_{x ∈ X} |Y| / |x^Y|`.
pub fn commuting_pairs_by_classes(xs: &[Permutation], y: &PermutationGroup) -> u128 {
    let order = y.order();
    par::map_slice(xs, |x| order / class_size_under(x, y) as u128)
        .into_iter()
        .sum()
}

/// `pr` over explicit element sets, counted directly.
pub fn pr_elements(xs: &[Permutation], ys: &[Permutation]) -> Result<ExactRational> {
    if xs.is_empty() || ys.is_empty() {
        return Err(GroupError::Precondition("empty element set".into()));
    }
    let d = xs[0].degree();
    if let Some(bad) = xs.iter().chain(ys).find(|z| z.degree() != d) {
        return Err(GroupError::DegreeMismatch {
            expected: d,
            found: bad.degree(),
        });
    }
    let c = commuting_pairs_direct(xs, ys);
    Ok(ExactRational::new(c, xs.len() as u128 * ys.len() as u128))
}

fn pr_counted(xs: &[Permutation], ys: &[Permutation], y: &PermutationGroup) -> Result<ExactRational> {
    let direct = commuting_pairs_direct(xs, ys);
    let by_classes = commuting_pairs_by_classes(xs, y);
    if direct != by_classes {
        return Err(GroupError::Inconsistent(format!(
            "commuting pairs: direct count {direct}, class count {by_classes}"
        )));
    }
    Ok(ExactRational::new(direct, xs.len() as u128 * ys.len() as u128))
}

/// Exact `pr(X, Y)` for subgroups of a common symmetric group.
pub fn pr(x: &PermutationGroup, y: &PermutationGroup) -> Result<ExactRational> {
    check_degrees(x, y)?;
    if x.is_trivial() || y.is_trivial() {
        return Ok(ExactRational::one());
    }
    pr_counted(&x.elements()?, &y.elements()?, y)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPair {
    pub value: ExactRational,
    /// generators of the Sylow `p`-subgroup, in cycle notation
    pub p_generators: Vec<String>,
    pub q_generators: Vec<String>,
}

fn cycle_strings(h: &PermutationGroup) -> Vec<String> {
    h.generators().iter().map(|g| g.to_string()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaReport {
    pub p: u64,
    pub q: u64,
    /// sorted increasingly
    pub values: Vec<ExactRational>,
    /// one attaining pair per value, in the order of `values`
    pub witnesses: Vec<WitnessPair>,
    /// prime whose Sylow subgroups were swept (the other was held fixed)
    pub swept_prime: u64,
    pub conjugates_swept: usize,
}

impl OmegaReport {
    pub fn max(&self) -> &ExactRational {
        self.values.last().expect("omega sets are nonempty")
    }

    pub fn min(&self) -> &ExactRational {
        self.values.first().expect("omega sets are nonempty")
    }

    pub fn max_witness(&self) -> &WitnessPair {
        self.witnesses.last().expect("omega sets are nonempty")
    }
}

/// `Ω` from given Sylow subgroups `sp`, `sq`: one is held fixed while the
/// other runs over all its distinct conjugates (whichever orbit is
/// smaller). Conjugation invariance of `pr` makes this cover every pair.
pub fn omega_from(
    g: &PermutationGroup,
    p: u64,
    sp: &PermutationGroup,
    q: u64,
    sq: &PermutationGroup,
) -> Result<OmegaReport> {
    if sp.is_trivial() || sq.is_trivial() {
        let one = ExactRational::one();
        return Ok(OmegaReport {
            p,
            q,
            values: vec![one.clone()],
            witnesses: vec![WitnessPair {
                value: one,
                p_generators: cycle_strings(sp),
                q_generators: cycle_strings(sq),
            }],
            swept_prime: q,
            conjugates_swept: 1,
        });
    }
    let (side, members) = smaller_orbit(g, sp, sq)?;
    let (fixed, swept_prime) = match side {
        Side::First => (sq, p),
        Side::Second => (sp, q),
    };
    let fixed_elems = fixed.elements()?;
    let values = par::map_slice(&members, |m| pr_counted(&fixed_elems, &m.elements, &m.group))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let mut first: BTreeMap<ExactRational, usize> = BTreeMap::new();
    for (i, v) in values.iter().enumerate() {
        first.entry(v.clone()).or_insert(i);
    }
    let witnesses = first
        .iter()
        .map(|(v, &i)| {
            let swept = &members[i].group;
            let (pg, qg) = match side {
                Side::First => (swept, fixed),
                Side::Second => (fixed, swept),
            };
            WitnessPair {
                value: v.clone(),
                p_generators: cycle_strings(pg),
                q_generators: cycle_strings(qg),
            }
        })
        .collect();
    Ok(OmegaReport {
        p,
        q,
        values: first.into_keys().collect(),
        witnesses,
        swept_prime,
        conjugates_swept: members.len(),
    })
}

/// `Ω_{p,q}(G)`: every value of `pr(P, Q)` over Sylow `p`- and
/// `q`-subgroups. `{1}` when either Sylow subgroup is trivial.
pub fn omega_set(g: &PermutationGroup, p: u64, q: u64) -> Result<OmegaReport> {
    if p == q {
        return Err(GroupError::Precondition("omega needs two distinct primes".into()));
    }
    let sp = sylow_subgroup(g, p)?;
    let sq = sylow_subgroup(g, q)?;
    omega_from(g, p, &sp, q, &sq)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairMaximum {
    pub p: u64,
    pub q: u64,
    pub max: ExactRational,
    pub witness: WitnessPair,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrStarReport {
    pub pi1: PrimeSet,
    pub pi2: PrimeSet,
    pub value: ExactRational,
    /// one entry per unordered prime pair, sorted
    pub per_pair: Vec<PairMaximum>,
}

/// Unordered pairs `{p, q}` of distinct primes from `primes` with one in
/// `pi1` and the other in `pi2`, as `(smaller, larger)`.
pub fn prime_pairs(primes: &[u64], pi1: &PrimeSet, pi2: &PrimeSet) -> Vec<(u64, u64)> {
    let mut out = BTreeSet::new();
    for &p in primes.iter().filter(|&&p| pi1.contains(p)) {
        for &q in primes.iter().filter(|&&q| pi2.contains(q) && q != p) {
            out.insert((p.min(q), p.max(q)));
        }
    }
    out.into_iter().collect()
}

/// Sylow subgroups of `g` for the given primes, computed once each.
pub fn sylow_system(g: &PermutationGroup, primes: &[u64]) -> Result<BTreeMap<u64, PermutationGroup>> {
    let found = par::map_slice(primes, |&p| sylow_subgroup(g, p));
    primes.iter().copied().zip(found).map(|(p, s)| Ok((p, s?))).collect()
}

/// `pr*_G(π₁, π₂)`: the minimum over prime pairs of the maximum of
/// `pr(P, Q)` over Sylow pairs; 1 when no pair qualifies.
pub fn pr_star(g: &PermutationGroup, pi1: &PrimeSet, pi2: &PrimeSet) -> Result<PrStarReport> {
    let pairs = prime_pairs(&g.prime_divisors(), pi1, pi2);
    let needed: Vec<u64> = pairs
        .iter()
        .flat_map(|&(p, q)| [p, q])
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let sylows = sylow_system(g, &needed)?;
    let mut per_pair = Vec::with_capacity(pairs.len());
    for (p, q) in pairs {
        let om = omega_from(g, p, &sylows[&p], q, &sylows[&q])?;
        per_pair.push(PairMaximum {
            p,
            q,
            max: om.max().clone(),
            witness: om.max_witness().clone(),
        });
    }
    let value = per_pair
        .iter()
        .map(|e| e.max.clone())
        .min()
        .unwrap_or_else(ExactRational::one);
    Ok(PrStarReport {
        pi1: pi1.clone(),
        pi2: pi2.clone(),
        value,
        per_pair,
    })
}

/// `pr*(G)` over all primes.
pub fn pr_star_all(g: &PermutationGroup) -> Result<ExactRational> {
    Ok(pr_star(g, &PrimeSet::All, &PrimeSet::All)?.value)
}

/// `pr*` of the direct product of `factors`, assembled from the factors:
/// Sylow subgroups and their conjugates split factorwise and `pr` is
/// multiplicative, so each pair maximum is the product of the factors'
/// maxima.
pub fn pr_star_product_rule(factors: &[PermutationGroup], pi1: &PrimeSet, pi2: &PrimeSet) -> Result<ExactRational> {
    let primes: Vec<u64> = factors
        .iter()
        .flat_map(|f| f.prime_divisors())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let pairs = prime_pairs(&primes, pi1, pi2);
    let mut best: Option<ExactRational> = None;
    for (p, q) in pairs {
        let mut prod = ExactRational::one();
        for f in factors {
            prod = &prod * omega_set(f, p, q)?.max();
        }
        best = Some(match best {
            Some(b) if b <= prod => b,
            _ => prod,
        });
    }
    Ok(best.unwrap_or_else(ExactRational::one))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build, GroupExpression};

    fn g(s: &str) -> PermutationGroup {
        build(&GroupExpression::parse(s).unwrap()).unwrap()
    }

    fn sub(deg: usize, gens: &[&str]) -> PermutationGroup {
        let gens: Vec<_> = gens
            .iter()
            .map(|s| Permutation::parse_cycles(deg, s).unwrap())
            .collect();
        PermutationGroup::generated(deg, &gens).unwrap()
    }

    #[test]
    fn pr_examples() {
        assert_eq!(pr(&sub(3, &["(1 2)"]), &sub(3, &["(1 2 3)"])).unwrap(), ratio(2, 3));
        let c = g("C(12)");
        assert_eq!(pr(&c, &c).unwrap(), ratio(1, 1));
        let a5 = g("Alt(5)");
        let p2 = sylow_subgroup(&a5, 2).unwrap();
        let p5 = sylow_subgroup(&a5, 5).unwrap();
        assert_eq!(pr(&p2, &p5).unwrap(), ratio(2, 5));
        assert_eq!(pr(&p5, &p2).unwrap(), ratio(2, 5));
        // pr(G, G) is the number of classes over the order
        let s3 = g("Sym(3)");
        assert_eq!(pr(&s3, &s3).unwrap(), ratio(3, 6));
    }

    #[test]
    fn element_sets() {
        let xs = vec![Permutation::parse_cycles(3, "(1 2)").unwrap()];
        let ys = g("Sym(3)").elements().unwrap();
        assert_eq!(pr_elements(&xs, &ys).unwrap(), ratio(2, 6));
        assert!(pr_elements(&[], &ys).is_err());
    }

    #[test]
    fn omega_of_sym5() {
        let s5 = g("Sym(5)");
        assert_eq!(omega_set(&s5, 2, 3).unwrap().values, vec![ratio(5, 12), ratio(1, 2)]);
        assert_eq!(omega_set(&s5, 2, 5).unwrap().values, vec![ratio(3, 10)]);
        assert_eq!(omega_set(&s5, 3, 5).unwrap().values, vec![ratio(7, 15)]);
        assert_eq!(pr_star_all(&s5).unwrap(), ratio(3, 10));
    }

    #[test]
    fn witnesses_attain_their_values() {
        let s5 = g("Sym(5)");
        let om = omega_set(&s5, 2, 3).unwrap();
        for w in &om.witnesses {
            let p = sub(5, &w.p_generators.iter().map(|s| s.as_str()).collect::<Vec<_>>());
            let q = sub(5, &w.q_generators.iter().map(|s| s.as_str()).collect::<Vec<_>>());
            assert_eq!(p.order(), 8);
            assert_eq!(q.order(), 3);
            assert_eq!(pr(&p, &q).unwrap(), w.value);
        }
    }

    #[test]
    fn pr_star_examples() {
        assert_eq!(pr_star_all(&g("Alt(5)")).unwrap(), ratio(2, 5));
        let r = pr_star(&g("Alt(5)"), &PrimeSet::Single(2), &PrimeSet::Complement(5)).unwrap();
        assert_eq!(r.value, ratio(1, 2));
        assert_eq!(r.per_pair.len(), 1);
        assert_eq!(pr_star_all(&g("C(30)")).unwrap(), ratio(1, 1));
        assert_eq!(pr_star_all(&g("D(4)")).unwrap(), ratio(1, 1));
        assert_eq!(pr_star_all(&g("Sym(3)")).unwrap(), ratio(2, 3));
    }

    #[test]
    fn product_rule_route() {
        let s5 = g("Sym(5)");
        let s3 = g("Sym(3)");
        let v = pr_star_product_rule(&[s5, s3.clone(), s3], &PrimeSet::All, &PrimeSet::All).unwrap();
        assert_eq!(v, ratio(2, 9));
    }

    #[test]
    fn pairs_are_unordered() {
        let pairs = prime_pairs(&[2, 3, 5], &PrimeSet::Odd, &PrimeSet::Odd);
        assert_eq!(pairs, vec![(3, 5)]);
        let pairs = prime_pairs(&[2, 3, 5], &PrimeSet::Single(2), &PrimeSet::Complement(5));
        assert_eq!(pairs, vec![(2, 3)]);
        let pairs = prime_pairs(&[2, 3, 5], &PrimeSet::All, &PrimeSet::All);
        assert_eq!(pairs, vec![(2, 3), (2, 5), (3, 5)]);
    }
}
