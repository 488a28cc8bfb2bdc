//! Constructors for every group the toolkit works with.

mod expr;
pub mod field;

pub use expr::GroupExpression;

use crate::error::{GroupError, Result};
use crate::group::PermutationGroup;
use crate::perm::Permutation;
use crate::primes;
use field::FiniteField;

pub const MAX_INVOLUTION_BLOCKS: usize = 8;

pub fn build(expr: &GroupExpression) -> Result<PermutationGroup> {
    match expr {
        GroupExpression::Sym(n) => symmetric(*n),
        GroupExpression::Alt(n) => alternating(*n),
        GroupExpression::Cyclic(n) => cyclic(*n),
        GroupExpression::Dihedral(n) => dihedral(*n),
        GroupExpression::Psl2(q) => psl2(*q),
        GroupExpression::Sp62 => sp62(),
        GroupExpression::InvolutionExample(s) => involution_example(*s),
        GroupExpression::DirectProduct(_) | GroupExpression::Power(..) => {
            let factors = expr.factors().iter().map(build).collect::<Result<Vec<_>>>()?;
            Ok(DirectProduct::new(&factors)?.group().clone())
        }
        GroupExpression::FromGenerators { degree, generators } => {
            let gens = generators
                .iter()
                .map(|g| Permutation::parse_cycles(*degree, g))
                .collect::<Result<Vec<_>>>()?;
            PermutationGroup::generated(*degree, &gens)
        }
    }
}

/// Order predicted for a named family, when the expression has one.
pub fn predicted_order(expr: &GroupExpression) -> Option<u128> {
    let fact = |n: usize| (1..=n as u128).product::<u128>();
    Some(match expr {
        GroupExpression::Sym(n) => fact(*n),
        GroupExpression::Alt(n) => (fact(*n) / 2).max(1),
        GroupExpression::Cyclic(n) => *n as u128,
        GroupExpression::Dihedral(n) => 2 * *n as u128,
        GroupExpression::Psl2(q) => {
            let q = *q as u128;
            q * (q * q - 1) / if q % 2 == 1 { 2 } else { 1 }
        }
        GroupExpression::Sp62 => 1_451_520,
        GroupExpression::InvolutionExample(s) => {
            primes::odd_primes(*s).iter().map(|&p| p as u128).product::<u128>() << s
        }
        GroupExpression::DirectProduct(_) | GroupExpression::Power(..) => {
            let mut acc = 1u128;
            for f in expr.factors() {
                acc *= predicted_order(&f)?;
            }
            acc
        }
        GroupExpression::FromGenerators { .. } => return None,
    })
}

fn gens_of(degree: usize, cycles: &[Vec<u32>]) -> Permutation {
    Permutation::from_cycles(degree, cycles).expect("builder cycles are valid")
}

fn full_cycle(points: impl Iterator<Item = u32>) -> Vec<u32> {
    points.collect()
}

pub fn symmetric(n: usize) -> Result<PermutationGroup> {
    if n == 0 {
        return Err(GroupError::Unsupported("Sym(0)".into()));
    }
    if n == 1 {
        return Ok(PermutationGroup::trivial(1));
    }
    let gens = [gens_of(n, &[vec![0, 1]]), gens_of(n, &[full_cycle(0..n as u32)])];
    PermutationGroup::generated(n, &gens)
}

pub fn alternating(n: usize) -> Result<PermutationGroup> {
    if n == 0 {
        return Err(GroupError::Unsupported("Alt(0)".into()));
    }
    if n < 3 {
        return Ok(PermutationGroup::trivial(n));
    }
    let long = if n % 2 == 1 {
        full_cycle(0..n as u32)
    } else {
        full_cycle(1..n as u32)
    };
    let gens = [gens_of(n, &[vec![0, 1, 2]]), gens_of(n, &[long])];
    PermutationGroup::generated(n, &gens)
}

pub fn cyclic(n: usize) -> Result<PermutationGroup> {
    if n == 0 {
        return Err(GroupError::Unsupported("C(0)".into()));
    }
    if n == 1 {
        return Ok(PermutationGroup::trivial(1));
    }
    PermutationGroup::generated(n, &[gens_of(n, &[full_cycle(0..n as u32)])])
}

/// Rotation and reflection of the `n`-gon (order `2n`). `D(1)` and `D(2)`
/// act on 2 and 4 points.
pub fn dihedral_generators(n: usize) -> Result<(usize, Permutation, Permutation)> {
    match n {
        0 => Err(GroupError::Unsupported("D(0)".into())),
        1 => Ok((2, Permutation::identity(2), gens_of(2, &[vec![0, 1]]))),
        2 => Ok((4, gens_of(4, &[vec![0, 1]]), gens_of(4, &[vec![2, 3]]))),
        _ => {
            let r = gens_of(n, &[full_cycle(0..n as u32)]);
            let images: Vec<u32> = (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect();
            Ok((n, r, Permutation::from_images(images)?))
        }
    }
}

pub fn dihedral(n: usize) -> Result<PermutationGroup> {
    let (deg, r, s) = dihedral_generators(n)?;
    PermutationGroup::generated(deg, &[r, s])
}

/// PSL(2,q) acting on the `q + 1` points of the projective line; point `q`
/// is infinity. Generated by the translations `z ↦ z + t` for `t` in an
/// additive basis and the inversion `z ↦ -1/z`.
pub fn psl2(q: u64) -> Result<PermutationGroup> {
    let f = FiniteField::new(q)?;
    let n = f.order();
    let inf = n;
    let mut gens = Vec::new();
    for t in f.additive_basis() {
        let mut images: Vec<u32> = (0..n).map(|z| f.add(z, t) as u32).collect();
        images.push(inf as u32);
        gens.push(Permutation::from_images(images)?);
    }
    let mut w = vec![0u32; n + 1];
    w[inf] = 0;
    w[0] = inf as u32;
    for (z, slot) in w.iter_mut().enumerate().take(n).skip(1) {
        *slot = f.neg(f.inv(z).expect("nonzero")) as u32;
    }
    gens.push(Permutation::from_images(w)?);
    PermutationGroup::generated(n + 1, &gens)
}

/// Sp(6,2) on the 63 nonzero vectors of GF(2)^6, generated by symplectic
/// transvections `x ↦ x + B(x,v) v`. Vector `v` (as a 6-bit mask) is point `v - 1`.
pub fn sp62() -> Result<PermutationGroup> {
    // B(x, y) = x1 y4 + x2 y5 + x3 y6 + x4 y1 + x5 y2 + x6 y3
    let form = |x: u32, y: u32| -> u32 {
        let swapped = ((y & 0b111) << 3) | (y >> 3);
        (x & swapped).count_ones() & 1
    };
    let mut gens = Vec::new();
    for v in 1u32..64 {
        let images: Vec<u32> = (1u32..64)
            .map(|x| if form(x, v) == 1 { x ^ v } else { x })
            .map(|y| y - 1)
            .collect();
        gens.push(Permutation::from_images(images)?);
    }
    PermutationGroup::generated(63, &gens)
}

/// Cyclic groups of the first `s` odd prime orders, each extended by an
/// involution inverting it and centralizing the others. Realised as the
/// direct product of the dihedral groups of orders `2 p_i`, one block of
/// `p_i` points per prime.
pub fn involution_example(s: usize) -> Result<PermutationGroup> {
    Ok(involution_example_parts(s)?.group)
}

pub struct InvolutionExampleParts {
    pub group: PermutationGroup,
    pub primes: Vec<u64>,
    /// `rotations[i]` generates the cyclic factor of order `primes[i]`
    pub rotations: Vec<Permutation>,
    /// `involutions[i]` inverts `rotations[i]`
    pub involutions: Vec<Permutation>,
}

pub fn involution_example_parts(s: usize) -> Result<InvolutionExampleParts> {
    if !(1..=MAX_INVOLUTION_BLOCKS).contains(&s) {
        return Err(GroupError::Unsupported(format!(
            "InvolutionExample({s}) needs 1 <= s <= {MAX_INVOLUTION_BLOCKS}"
        )));
    }
    let primes = primes::odd_primes(s);
    let degree: usize = primes.iter().sum::<u64>() as usize;
    let mut rotations = Vec::new();
    let mut involutions = Vec::new();
    let mut offset = 0usize;
    for &p in &primes {
        let (_, r, a) = dihedral_generators(p as usize)?;
        rotations.push(r.shifted(offset, degree));
        involutions.push(a.shifted(offset, degree));
        offset += p as usize;
    }
    let all: Vec<_> = rotations.iter().chain(&involutions).cloned().collect();
    let group = PermutationGroup::generated(degree, &all)?;
    Ok(InvolutionExampleParts {
        group,
        primes,
        rotations,
        involutions,
    })
}

/// Direct product acting on the disjoint union of the factors' domains.
#[derive(Clone, Debug)]
pub struct DirectProduct {
    group: PermutationGroup,
    factors: Vec<PermutationGroup>,
    offsets: Vec<usize>,
}

impl DirectProduct {
    pub fn new(factors: &[PermutationGroup]) -> Result<Self> {
        if factors.is_empty() {
            return Err(GroupError::Unsupported("empty direct product".into()));
        }
        let mut offsets = Vec::with_capacity(factors.len());
        let mut degree = 0;
        for f in factors {
            offsets.push(degree);
            degree += f.degree();
        }
        let gens: Vec<Permutation> = factors
            .iter()
            .zip(&offsets)
            .flat_map(|(f, &off)| f.generators().iter().map(move |g| g.shifted(off, degree)))
            .collect();
        let group = PermutationGroup::generated(degree, &gens)?;
        Ok(DirectProduct {
            group,
            factors: factors.to_vec(),
            offsets,
        })
    }

    pub fn group(&self) -> &PermutationGroup {
        &self.group
    }

    pub fn factors(&self) -> &[PermutationGroup] {
        &self.factors
    }

    pub fn embed(&self, factor: usize, x: &Permutation) -> Result<Permutation> {
        let f = &self.factors[factor];
        if x.degree() != f.degree() {
            return Err(GroupError::DegreeMismatch {
                expected: f.degree(),
                found: x.degree(),
            });
        }
        Ok(x.shifted(self.offsets[factor], self.group.degree()))
    }

    /// Image of a subgroup of factor `factor` in the product.
    pub fn embed_subgroup(&self, factor: usize, h: &PermutationGroup) -> Result<PermutationGroup> {
        let gens = h
            .generators()
            .iter()
            .map(|g| self.embed(factor, g))
            .collect::<Result<Vec<_>>>()?;
        PermutationGroup::generated(self.group.degree(), &gens)
    }

    /// `H_1 × ... × H_k` for subgroups `H_i` of the factors.
    pub fn product_of(&self, parts: &[PermutationGroup]) -> Result<PermutationGroup> {
        if parts.len() != self.factors.len() {
            return Err(GroupError::Precondition("one subgroup per factor expected".into()));
        }
        let mut gens = Vec::new();
        for (i, h) in parts.iter().enumerate() {
            for g in h.generators() {
                gens.push(self.embed(i, g)?);
            }
        }
        PermutationGroup::generated(self.group.degree(), &gens)
    }
}

pub fn direct_product(gs: &[PermutationGroup]) -> Result<DirectProduct> {
    DirectProduct::new(gs)
}

fn p_part_of(n: u64, p: u64) -> u64 {
    let mut r = 1;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
        r *= p;
    }
    r
}

/// Hall p'-subgroup read off the construction, for expressions whose
/// structure makes one obvious. `Ok(None)` when the expression offers no
/// shortcut (a generic search is needed).
pub fn hall_complement_by_construction(expr: &GroupExpression, p: u64) -> Result<Option<PermutationGroup>> {
    match expr {
        GroupExpression::Cyclic(n) => {
            let g = cyclic(*n)?;
            let gens: Vec<_> = g
                .generators()
                .iter()
                .map(|x| x.pow(p_part_of(*n as u64, p) as i64))
                .collect();
            Ok(Some(PermutationGroup::generated(g.degree(), &gens)?))
        }
        GroupExpression::Dihedral(n) => {
            let (deg, r, s) = dihedral_generators(*n)?;
            let order = 2 * *n as u64;
            if p_part_of(order, p) == 1 {
                return Ok(Some(PermutationGroup::generated(deg, &[r, s])?));
            }
            let gens = if p == 2 {
                vec![r.pow(p_part_of(*n as u64, 2) as i64)]
            } else {
                vec![r.pow(p_part_of(*n as u64, p) as i64), s]
            };
            Ok(Some(PermutationGroup::generated(deg, &gens)?))
        }
        GroupExpression::InvolutionExample(s) => {
            let parts = involution_example_parts(*s)?;
            let degree = parts.group.degree();
            let gens: Vec<Permutation> = if p == 2 {
                parts.rotations.clone()
            } else {
                parts
                    .primes
                    .iter()
                    .zip(&parts.rotations)
                    .filter(|(&q, _)| q != p)
                    .map(|(_, r)| r.clone())
                    .chain(parts.involutions.iter().cloned())
                    .collect()
            };
            Ok(Some(PermutationGroup::generated(degree, &gens)?))
        }
        GroupExpression::DirectProduct(_) | GroupExpression::Power(..) => {
            let factors = expr.factors();
            let mut groups = Vec::with_capacity(factors.len());
            let mut parts = Vec::with_capacity(factors.len());
            for f in &factors {
                let g = build(f)?;
                let h = match hall_complement_by_construction(f, p)? {
                    Some(h) => h,
                    None => crate::structure::hall_p_complement(&g, p)?.group,
                };
                groups.push(g);
                parts.push(h);
            }
            let dp = DirectProduct::new(&groups)?;
            Ok(Some(dp.product_of(&parts)?))
        }
        _ => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order_of(s: &str) -> u128 {
        build(&GroupExpression::parse(s).unwrap()).unwrap().order()
    }

    #[test]
    fn family_orders() {
        assert_eq!(order_of("Sym(5)"), 120);
        assert_eq!(order_of("Alt(6)"), 360);
        assert_eq!(order_of("Alt(7)"), 2520);
        assert_eq!(order_of("C(12)"), 12);
        assert_eq!(order_of("D(4)"), 8);
        assert_eq!(order_of("D(1)"), 2);
        assert_eq!(order_of("D(2)"), 4);
        assert_eq!(order_of("Sym(1)"), 1);
        assert_eq!(order_of("Alt(2)"), 1);
    }

    #[test]
    fn psl2_orders_match_formula() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let e = GroupExpression::Psl2(q);
            let g = build(&e).unwrap();
            assert_eq!(Some(g.order()), predicted_order(&e), "PSL2({q})");
            assert_eq!(g.degree() as u64, q + 1);
        }
        assert!(build(&GroupExpression::Psl2(6)).is_err());
    }

    #[test]
    fn psl2_7_has_order_168_on_8_points() {
        let g = build(&GroupExpression::Psl2(7)).unwrap();
        assert_eq!(g.order(), 168);
        assert_eq!(g.degree(), 8);
        // exhaustive enumeration agrees with the chain
        assert_eq!(g.elements().unwrap().len(), 168);
    }

    #[test]
    fn products_and_powers() {
        assert_eq!(order_of("Sym(3) * Sym(3)"), 36);
        assert_eq!(order_of("Sym(5) * Pow(Sym(3),2)"), 4320);
        assert_eq!(order_of("Pow(Sym(3),1)"), 6);
        let dp = DirectProduct::new(&[symmetric(3).unwrap()]).unwrap();
        assert_eq!(dp.group().order(), 6);
    }

    #[test]
    fn involution_example_structure() {
        assert_eq!(order_of("InvolutionExample(1)"), 6);
        assert_eq!(order_of("InvolutionExample(2)"), 60);
        assert_eq!(order_of("InvolutionExample(3)"), 105 * 8);
        assert!(build(&GroupExpression::InvolutionExample(0)).is_err());
        assert!(build(&GroupExpression::InvolutionExample(9)).is_err());
        let parts = involution_example_parts(4).unwrap();
        for (i, a) in parts.involutions.iter().enumerate() {
            for (j, r) in parts.rotations.iter().enumerate() {
                let conj = r.conjugate_by(a);
                if i == j {
                    assert_eq!(conj, r.inverse(), "a_{i} inverts C_{i}");
                } else {
                    assert_eq!(&conj, r, "a_{i} centralizes C_{j}");
                }
            }
        }
    }

    #[test]
    fn from_generators() {
        assert_eq!(order_of(r#"Perm(deg=5; gens="(1 2 3 4 5), (3 4 5)")"#), 60);
        assert_eq!(order_of(r#"Perm(deg=3; gens="")"#), 1);
        let bad = GroupExpression::parse(r#"Perm(deg=3; gens="(1 4)")"#).unwrap();
        assert!(matches!(build(&bad), Err(GroupError::CycleSyntax(_))));
    }

    #[test]
    fn predicted_orders_hold() {
        for s in [
            "Sym(4)",
            "Alt(5)",
            "C(30)",
            "D(15)",
            "PSL2(9)",
            "InvolutionExample(3)",
            "Alt(5) * C(6)",
        ] {
            let e = GroupExpression::parse(s).unwrap();
            assert_eq!(Some(build(&e).unwrap().order()), predicted_order(&e), "{s}");
        }
    }

    #[test]
    fn embeddings_lift_subgroups() {
        let s3 = symmetric(3).unwrap();
        let dp = DirectProduct::new(&[s3.clone(), s3.clone()]).unwrap();
        let t = PermutationGroup::generated(3, &[Permutation::parse_cycles(3, "(1 2)").unwrap()]).unwrap();
        let lifted = dp.embed_subgroup(1, &t).unwrap();
        assert_eq!(lifted.order(), 2);
        assert_eq!(lifted.generators()[0].to_string(), "(4 5)");
        assert_eq!(dp.product_of(&[t.clone(), t]).unwrap().order(), 4);
    }
}
