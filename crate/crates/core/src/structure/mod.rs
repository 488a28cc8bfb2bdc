//! Sylow subgroups, cores, the Fitting machinery and the classification
//! predicates.

mod fitting;
mod hall;
mod quotient;

pub use fitting::{fitting_subgroup, soluble_radical, upper_fitting_series, FittingSeriesReport};
pub use hall::{hall_p_complement, hall_p_complement_for, HallComplement, HallMethod};
pub use quotient::{quotient_group, Quotient};

use crate::error::{GroupError, Result};
use crate::group::{normalizes, PermutationGroup};
use crate::perm::Permutation;

/// `x` raised to the `p'`-part of its order: the `p`-part of `x`, or
/// `None` when the order of `x` is prime to `p`.
pub(crate) fn p_part_element(x: &Permutation, p: u64) -> Option<Permutation> {
    let o = x.order();
    let mut pp = 1;
    while (o / pp).is_multiple_of(p) {
        pp *= p;
    }
    (pp > 1).then(|| x.pow((o / pp) as i64))
}

/// `x` raised to the `p`-part of its order, which has order prime to `p`.
pub(crate) fn p_prime_part_element(x: &Permutation, p: u64) -> Permutation {
    let o = x.order();
    let mut pp = 1;
    while (o / pp).is_multiple_of(p) {
        pp *= p;
    }
    if pp == 1 {
        x.clone()
    } else {
        x.pow(pp as i64)
    }
}

/// A Sylow `p`-subgroup, grown by ascent: while the current `p`-subgroup
/// `S` is too small, some `p`-element of `N_G(S)` lies outside `S`.
/// Trivial when `p` does not divide the order.
pub fn sylow_subgroup(g: &PermutationGroup, p: u64) -> Result<PermutationGroup> {
    let target = g.p_part(p);
    if target == 1 {
        return Ok(PermutationGroup::trivial(g.degree()));
    }
    if target == g.order() {
        return Ok(g.clone());
    }
    // start from the p-parts of the generators that normalize each other
    let mut s = PermutationGroup::trivial(g.degree());
    for x in g.generators() {
        if let Some(z) = p_part_element(x, p) {
            if !s.has(&z) && normalizes(&z, &s) {
                let cand = s.join_elements(&[z])?;
                if cand.is_p_group(p) {
                    s = cand;
                }
            }
        }
    }
    while s.order() < target {
        let found = g.find_map_element(|y| {
            let z = p_part_element(y, p)?;
            (!s.has(&z) && normalizes(&z, &s)).then_some(z)
        })?;
        match found {
            Some(z) => s = s.join_elements(&[z])?,
            None => {
                return Err(GroupError::SearchExhausted(format!(
                    "no p-element normalizes the {p}-subgroup of order {}",
                    s.order()
                )))
            }
        }
    }
    Ok(s)
}

/// `O_p(G)`: the intersection of the conjugates of a Sylow `p`-subgroup.
pub fn p_core(g: &PermutationGroup, p: u64) -> Result<PermutationGroup> {
    sylow_subgroup(g, p)?.core_in(g)
}

/// `O_{p'}(G)`, the largest normal subgroup of order prime to `p`.
///
/// A `p'`-element lies in it exactly when its normal closure is a
/// `p'`-group, so a single pass over the elements suffices. With `M`
/// the part found so far, membership only depends on the coset `xM`,
/// so rejected cosets are remembered.
pub fn p_prime_core(g: &PermutationGroup, p: u64) -> Result<PermutationGroup> {
    if g.p_part(p) == 1 {
        return Ok(g.clone());
    }
    let candidates = g.filter_elements(|x| x.order() % p != 0)?;
    let mut m = PermutationGroup::trivial(g.degree());
    let mut rejected: Vec<Permutation> = Vec::new();
    for x in candidates {
        if m.has(&x) || rejected.iter().any(|r| m.has(&x.then(r))) {
            continue;
        }
        let mut gens = m.generators().to_vec();
        gens.push(x.clone());
        let n = g.normal_closure_of(&gens)?;
        if n.p_part(p) == 1 {
            m = n;
        } else {
            rejected.push(x.inverse());
        }
    }
    Ok(m)
}

pub fn is_nilpotent(g: &PermutationGroup) -> Result<bool> {
    let primes = g.prime_divisors();
    if primes.len() <= 1 {
        return Ok(true);
    }
    for p in primes {
        let s = sylow_subgroup(g, p)?;
        if !g.is_normal(&s)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Terms of the derived series down to where it becomes constant.
pub fn derived_series(g: &PermutationGroup) -> Result<Vec<PermutationGroup>> {
    let mut series = vec![g.clone()];
    loop {
        let last = series.last().unwrap();
        if last.is_trivial() {
            return Ok(series);
        }
        let d = last.derived_subgroup()?;
        if d.order() == last.order() {
            return Ok(series);
        }
        series.push(d);
    }
}

pub fn is_soluble(g: &PermutationGroup) -> Result<bool> {
    Ok(derived_series(g)?.last().unwrap().is_trivial())
}

/// Alternately factors out `O_{p'}` and `O_p`; `p`-soluble iff this
/// reaches the trivial group.
pub fn is_p_soluble(g: &PermutationGroup, p: u64) -> Result<bool> {
    if g.p_part(p) == 1 || is_soluble(g)? {
        return Ok(true);
    }
    let mut cur = g.clone();
    loop {
        if cur.is_trivial() {
            return Ok(true);
        }
        let o = p_prime_core(&cur, p)?;
        if !o.is_trivial() {
            cur = quotient_group(&cur, &o)?.group().clone();
            continue;
        }
        let o = p_core(&cur, p)?;
        if !o.is_trivial() {
            cur = quotient_group(&cur, &o)?.group().clone();
            continue;
        }
        return Ok(false);
    }
}

/// `Φ(P)` for a `p`-group: the normal closure of the generator
/// commutators and `p`-th powers.
pub fn frattini_of_p_group(pgrp: &PermutationGroup, p: u64) -> Result<PermutationGroup> {
    if !pgrp.is_p_group(p) {
        return Err(GroupError::NotPGroup { p });
    }
    let gens = pgrp.generators();
    let mut xs: Vec<Permutation> = gens.iter().map(|g| g.pow(p as i64)).collect();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            xs.push(a.commutator(b));
        }
    }
    xs.retain(|x| !x.is_identity());
    pgrp.normal_closure_of(&xs)
}

/// True iff some element has order exactly `m` (by an element census).
pub fn has_element_of_order(g: &PermutationGroup, m: u64) -> Result<bool> {
    if m == 0 || !g.order().is_multiple_of(m as u128) {
        return Ok(false);
    }
    Ok(g.find_map_element(|x| (x.order() == m).then_some(()))?.is_some())
}

/// Sorted orders of the elements, with multiplicities.
pub fn element_order_census(g: &PermutationGroup) -> Result<std::collections::BTreeMap<u64, u64>> {
    let mut out = std::collections::BTreeMap::new();
    for x in g.iter()? {
        *out.entry(x.order()).or_insert(0) += 1;
    }
    Ok(out)
}
