use crate::error::Result;
use crate::group::PermutationGroup;

use super::{p_core, quotient_group};

/// `F(G)`, the join of the `p`-cores.
pub fn fitting_subgroup(g: &PermutationGroup) -> Result<PermutationGroup> {
    let mut f = PermutationGroup::trivial(g.degree());
    for p in g.prime_divisors() {
        let o = p_core(g, p)?;
        if !o.is_trivial() {
            f = f.join(&o)?;
        }
    }
    Ok(f)
}

#[derive(Clone, Debug)]
pub struct FittingSeriesReport {
    /// `F_1 ≤ F_2 ≤ ...`, strictly increasing; the last term is `R(G)`
    pub terms: Vec<PermutationGroup>,
    /// `k` with `F_k = F_{k+1} = ...` (1-based, equal to `terms.len()`)
    pub stabilized_at: usize,
}

impl FittingSeriesReport {
    /// `F_i(G)` for `i ≥ 1`, continuing constantly past stabilization.
    pub fn term(&self, i: usize) -> &PermutationGroup {
        let k = i.clamp(1, self.terms.len());
        &self.terms[k - 1]
    }

    pub fn orders(&self) -> Vec<u128> {
        self.terms.iter().map(|t| t.order()).collect()
    }

    pub fn radical(&self) -> &PermutationGroup {
        self.terms.last().expect("series has a first term")
    }
}

/// `F_1 = F(G)`, `F_{i+1}/F_i = F(G/F_i)`, until the quotient has trivial
/// Fitting subgroup.
pub fn upper_fitting_series(g: &PermutationGroup) -> Result<FittingSeriesReport> {
    let mut terms = vec![fitting_subgroup(g)?];
    loop {
        let last = terms.last().unwrap();
        if last.order() == g.order() || last.is_trivial() {
            break;
        }
        let q = quotient_group(g, last)?;
        let f = fitting_subgroup(q.group())?;
        if f.is_trivial() {
            break;
        }
        let next = q.preimage(&f)?;
        terms.push(next);
    }
    let stabilized_at = terms.len();
    Ok(FittingSeriesReport { terms, stabilized_at })
}

/// `R(G)`, the largest normal soluble subgroup.
pub fn soluble_radical(g: &PermutationGroup) -> Result<PermutationGroup> {
    Ok(upper_fitting_series(g)?.radical().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build, GroupExpression};
    use crate::structure::is_nilpotent;

    fn g(s: &str) -> PermutationGroup {
        build(&GroupExpression::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn fitting_examples() {
        assert!(fitting_subgroup(&g("Alt(5)")).unwrap().is_trivial());
        assert_eq!(fitting_subgroup(&g("Sym(4)")).unwrap().order(), 4);
        for s in 1..=3 {
            let grp = g(&format!("InvolutionExample({s})"));
            let f = fitting_subgroup(&grp).unwrap();
            assert_eq!(grp.order() / f.order(), 1 << s);
            assert!(is_nilpotent(&f).unwrap());
        }
    }

    #[test]
    fn series_examples() {
        let s4 = upper_fitting_series(&g("Sym(4)")).unwrap();
        assert_eq!(s4.orders(), vec![4, 12, 24]);
        assert_eq!(s4.stabilized_at, 3);
        assert_eq!(s4.term(7).order(), 24);
        let c = upper_fitting_series(&g("C(12)")).unwrap();
        assert_eq!(c.orders(), vec![12]);
        let a5 = upper_fitting_series(&g("Alt(5)")).unwrap();
        assert_eq!(a5.orders(), vec![1]);
        assert_eq!(a5.stabilized_at, 1);
    }

    #[test]
    fn radicals() {
        assert_eq!(soluble_radical(&g("Sym(4)")).unwrap().order(), 24);
        assert!(soluble_radical(&g("Alt(5)")).unwrap().is_trivial());
        let r = soluble_radical(&g("Alt(5) * C(6)")).unwrap();
        assert_eq!(r.order(), 6);
        assert!(r.is_abelian());
        assert_eq!(soluble_radical(&g("Sym(5) * Sym(3)")).unwrap().order(), 6);
    }
}
