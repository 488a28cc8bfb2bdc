//! Brute-force oracles on raw image vectors. Nothing here goes through the
//! stabilizer chain or the library's counting code.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use sylprob_core::probability::ratio;
use sylprob_core::{build, ExactRational, GroupExpression, Permutation, PermutationGroup};

pub type Raw = Vec<u32>;

pub fn group(s: &str) -> PermutationGroup {
    build(&GroupExpression::parse(s).unwrap()).unwrap()
}

pub fn raw(x: &Permutation) -> Raw {
    x.images().to_vec()
}

/// apply `a`, then `b`
pub fn mul(a: &[u32], b: &[u32]) -> Raw {
    a.iter().map(|&i| b[i as usize]).collect()
}

pub fn inv(a: &[u32]) -> Raw {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x as usize] = i as u32;
    }
    out
}

pub fn commute(a: &[u32], b: &[u32]) -> bool {
    mul(a, b) == mul(b, a)
}

/// Every product of the generators, by breadth-first search.
pub fn closure(degree: usize, gens: &[Permutation]) -> HashSet<Raw> {
    let gens: Vec<Raw> = gens.iter().map(raw).collect();
    let id: Raw = (0..degree as u32).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = mul(&x, g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

pub fn elements(h: &PermutationGroup) -> HashSet<Raw> {
    closure(h.degree(), h.generators())
}

/// `x⁻¹ H x`
pub fn conjugate(h: &HashSet<Raw>, x: &[u32]) -> HashSet<Raw> {
    let xi = inv(x);
    h.iter().map(|y| mul(&mul(&xi, y), x)).collect()
}

/// Commuting pairs over all pairs, as a fraction.
pub fn pr(xs: &HashSet<Raw>, ys: &HashSet<Raw>) -> ExactRational {
    let count = xs
        .iter()
        .map(|x| ys.iter().filter(|y| commute(x, y)).count() as u128)
        .sum::<u128>();
    ratio(count, (xs.len() * ys.len()) as u128)
}

/// Distinct conjugates of `h` under `g`.
pub fn conjugates(g: &HashSet<Raw>, h: &HashSet<Raw>) -> Vec<HashSet<Raw>> {
    let mut seen: Vec<Vec<Raw>> = Vec::new();
    let mut out = Vec::new();
    for x in g {
        let c = conjugate(h, x);
        let mut key: Vec<Raw> = c.iter().cloned().collect();
        key.sort();
        if !seen.contains(&key) {
            seen.push(key);
            out.push(c);
        }
    }
    out
}

/// Intersection of all conjugates of `h`.
pub fn core(g: &HashSet<Raw>, h: &HashSet<Raw>) -> HashSet<Raw> {
    let mut acc = h.clone();
    for x in g {
        let c = conjugate(h, x);
        acc.retain(|y| c.contains(y));
    }
    acc
}

pub fn element_order(x: &[u32]) -> u64 {
    let id: Raw = (0..x.len() as u32).collect();
    let mut y = x.to_vec();
    let mut n = 1;
    while y != id {
        y = mul(&y, x);
        n += 1;
    }
    n
}

/// Every value of `pr(P, Q)` over all pairs of conjugates, sorted.
pub fn omega(g: &PermutationGroup, p: &PermutationGroup, q: &PermutationGroup) -> Vec<ExactRational> {
    let ge = elements(g);
    let ps = conjugates(&ge, &elements(p));
    let qs = conjugates(&ge, &elements(q));
    let mut vals: Vec<ExactRational> = ps.iter().flat_map(|a| qs.iter().map(move |b| pr(a, b))).collect();
    vals.sort();
    vals.dedup();
    vals
}
