//! Conjugacy orbits of subgroups, explored breadth first.
//!
//! Conjugates are told apart by their sorted element lists. The orbit is
//! expanded one member at a time so two orbits can be grown side by side
//! and the smaller one used for a sweep.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use crate::error::Result;
use crate::group::{fingerprint, PermutationGroup};
use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub struct ConjugateMember {
    /// sorted
    pub elements: Vec<Permutation>,
    pub generators: Vec<Permutation>,
    /// `x` with `H^x` equal to this member
    pub conjugator: Permutation,
    pub group: PermutationGroup,
}

pub struct ConjugateOrbit<'a> {
    ambient: &'a PermutationGroup,
    members: Vec<ConjugateMember>,
    buckets: HashMap<u64, Vec<usize>>,
    cursor: usize,
}

fn hash_of(elements: &[Permutation]) -> u64 {
    let mut h = DefaultHasher::new();
    elements.hash(&mut h);
    h.finish()
}

impl<'a> ConjugateOrbit<'a> {
    pub fn new(ambient: &'a PermutationGroup, h: &PermutationGroup) -> Result<Self> {
        let elements = fingerprint(&h.elements()?);
        let first = ConjugateMember {
            generators: h.generators().to_vec(),
            conjugator: ambient.identity(),
            group: h.clone(),
            elements,
        };
        let mut buckets = HashMap::new();
        buckets.insert(hash_of(&first.elements), vec![0]);
        Ok(ConjugateOrbit {
            ambient,
            members: vec![first],
            buckets,
            cursor: 0,
        })
    }

    fn find(&self, elements: &[Permutation]) -> bool {
        self.buckets
            .get(&hash_of(elements))
            .is_some_and(|idx| idx.iter().any(|&i| self.members[i].elements == elements))
    }

    /// Expands one member under every ambient generator. Returns true once
    /// the orbit is complete.
    pub fn step(&mut self) -> Result<bool> {
        if self.cursor >= self.members.len() {
            return Ok(true);
        }
        let base = self.cursor;
        self.cursor += 1;
        for g in self.ambient.generators() {
            let member = &self.members[base];
            let mut elements: Vec<Permutation> = member.elements.iter().map(|x| x.conjugate_by(g)).collect();
            elements.sort_unstable();
            if self.find(&elements) {
                continue;
            }
            let generators: Vec<Permutation> = member.generators.iter().map(|x| x.conjugate_by(g)).collect();
            let conjugator = member.conjugator.then(g);
            let group = member.group.conjugate(g)?;
            let idx = self.members.len();
            self.buckets.entry(hash_of(&elements)).or_default().push(idx);
            self.members.push(ConjugateMember {
                elements,
                generators,
                conjugator,
                group,
            });
        }
        Ok(self.cursor >= self.members.len())
    }

    pub fn is_complete(&self) -> bool {
        self.cursor >= self.members.len()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[ConjugateMember] {
        &self.members
    }

    pub fn into_members(self) -> Vec<ConjugateMember> {
        self.members
    }
}

/// Which side of a pair finished its orbit first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
}

/// Grows the conjugacy orbits of `a` and `b` in lockstep and returns the
/// first one to complete. Ties go to `a`.
pub fn smaller_orbit(
    ambient: &PermutationGroup,
    a: &PermutationGroup,
    b: &PermutationGroup,
) -> Result<(Side, Vec<ConjugateMember>)> {
    let mut oa = ConjugateOrbit::new(ambient, a)?;
    let mut ob = ConjugateOrbit::new(ambient, b)?;
    loop {
        if oa.step()? {
            return Ok((Side::First, oa.into_members()));
        }
        if ob.step()? {
            return Ok((Side::Second, ob.into_members()));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(deg: usize, gens: &[&str]) -> PermutationGroup {
        let gens: Vec<_> = gens
            .iter()
            .map(|s| Permutation::parse_cycles(deg, s).unwrap())
            .collect();
        PermutationGroup::generated(deg, &gens).unwrap()
    }

    #[test]
    fn sylow_counts_in_s4() {
        let s4 = grp(4, &["(1 2)", "(1 2 3 4)"]);
        let c3 = grp(4, &["(1 2 3)"]);
        assert_eq!(c3.conjugates_in(&s4).unwrap().len(), 4);
        let d8 = grp(4, &["(1 2 3 4)", "(1 3)"]);
        let conj = d8.conjugates_in(&s4).unwrap();
        assert_eq!(conj.len(), 3);
        assert!(conj.iter().all(|c| c.order() == 8));
    }

    #[test]
    fn conjugators_are_correct() {
        let a5 = grp(5, &["(1 2 3 4 5)", "(3 4 5)"]);
        let c5 = grp(5, &["(1 2 3 4 5)"]);
        let mut orbit = ConjugateOrbit::new(&a5, &c5).unwrap();
        while !orbit.step().unwrap() {}
        assert_eq!(orbit.len(), 6);
        for m in orbit.members() {
            assert!(c5.conjugate(&m.conjugator).unwrap().same_subgroup(&m.group));
        }
    }

    #[test]
    fn lockstep_prefers_the_short_orbit() {
        let s4 = grp(4, &["(1 2)", "(1 2 3 4)"]);
        let v4 = grp(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let c3 = grp(4, &["(1 2 3)"]);
        let (side, members) = smaller_orbit(&s4, &c3, &v4).unwrap();
        assert_eq!(side, Side::Second);
        assert_eq!(members.len(), 1);
    }
}
