//! Quotients by normal subgroups, realised as the action on right cosets.
//!
//! Each coset `Nx` is named by its canonical representative: the element
//! of `Nx` whose images of the base points of `N` are lexicographically
//! smallest. `G/N` acts regularly on the cosets, so an element of the
//! quotient is determined by where it sends the coset `N` itself.

use std::collections::HashMap;

use crate::error::{GroupError, Result};
use crate::group::PermutationGroup;
use crate::limits;
use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub struct Quotient {
    source: PermutationGroup,
    kernel: PermutationGroup,
    group: PermutationGroup,
    /// empty when the kernel is trivial and the map is the identity
    reps: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
}

fn canonical(kernel: &PermutationGroup, x: &Permutation) -> Permutation {
    let mut x = x.clone();
    for level in &kernel.chain().levels {
        let (k, _) = level
            .orbit
            .iter()
            .enumerate()
            .min_by_key(|(_, &d)| x.image(d as usize))
            .expect("orbits are nonempty");
        if k != 0 {
            x = level.reps[k].then(&x);
        }
    }
    x
}

pub fn quotient_group(g: &PermutationGroup, n: &PermutationGroup) -> Result<Quotient> {
    if !g.is_normal(n)? {
        return Err(GroupError::NotNormal);
    }
    if n.is_trivial() {
        return Ok(Quotient {
            source: g.clone(),
            kernel: n.clone(),
            group: g.clone(),
            reps: Vec::new(),
            index: HashMap::new(),
        });
    }
    let idx = g.order() / n.order();
    let limit = limits::quotient_degree_budget() as u128;
    if idx > limit {
        return Err(GroupError::BudgetExceeded {
            what: "quotient degree",
            needed: idx,
            limit,
        });
    }
    let mut reps = vec![g.identity()];
    let mut index = HashMap::new();
    index.insert(g.identity(), 0u32);
    let mut k = 0;
    while k < reps.len() {
        for s in g.generators() {
            let c = canonical(n, &reps[k].then(s));
            if !index.contains_key(&c) {
                index.insert(c.clone(), reps.len() as u32);
                reps.push(c);
            }
        }
        k += 1;
    }
    debug_assert_eq!(reps.len() as u128, idx);
    let mut q = Quotient {
        source: g.clone(),
        kernel: n.clone(),
        group: PermutationGroup::trivial(1),
        reps,
        index,
    };
    let degree = q.reps.len();
    let gens: Vec<Permutation> = g.generators().iter().map(|s| q.action_of(s)).collect::<Result<_>>()?;
    q.group = PermutationGroup::generated(degree, &gens)?;
    Ok(q)
}

impl Quotient {
    pub fn source(&self) -> &PermutationGroup {
        &self.source
    }

    pub fn kernel(&self) -> &PermutationGroup {
        &self.kernel
    }

    /// `G/N` as a permutation group (the source itself when `N = 1`).
    pub fn group(&self) -> &PermutationGroup {
        &self.group
    }

    pub fn is_identity_map(&self) -> bool {
        self.reps.is_empty()
    }

    fn action_of(&self, x: &Permutation) -> Result<Permutation> {
        let images = self
            .reps
            .iter()
            .map(|r| {
                let c = canonical(&self.kernel, &r.then(x));
                self.index.get(&c).copied().ok_or(GroupError::NotAMember)
            })
            .collect::<Result<Vec<u32>>>()?;
        Ok(Permutation::from_images_unchecked(images))
    }

    /// Image of an element of the source.
    pub fn image(&self, x: &Permutation) -> Result<Permutation> {
        if !self.source.contains(x)? {
            return Err(GroupError::NotAMember);
        }
        if self.is_identity_map() {
            return Ok(x.clone());
        }
        self.action_of(x)
    }

    /// `HN/N` for a subgroup `H` of the source.
    pub fn image_subgroup(&self, h: &PermutationGroup) -> Result<PermutationGroup> {
        if !h.is_subgroup_of(&self.source) {
            return Err(GroupError::NotContained);
        }
        if self.is_identity_map() {
            return Ok(h.clone());
        }
        let gens = h
            .generators()
            .iter()
            .map(|x| self.action_of(x))
            .collect::<Result<Vec<_>>>()?;
        PermutationGroup::generated(self.group.degree(), &gens)
    }

    /// Some preimage of a quotient element.
    pub fn lift(&self, y: &Permutation) -> Result<Permutation> {
        if !self.group.contains(y)? {
            return Err(GroupError::NotAMember);
        }
        if self.is_identity_map() {
            return Ok(y.clone());
        }
        Ok(self.reps[y.image(0)].clone())
    }

    /// Full preimage of a subgroup of the quotient.
    pub fn preimage(&self, k: &PermutationGroup) -> Result<PermutationGroup> {
        if !k.is_subgroup_of(&self.group) {
            return Err(GroupError::NotContained);
        }
        if self.is_identity_map() {
            return Ok(k.clone());
        }
        let lifts = k
            .generators()
            .iter()
            .map(|y| self.lift(y))
            .collect::<Result<Vec<_>>>()?;
        self.kernel.join_elements(&lifts)
    }
}
