//! Permutation groups certified by a stabilizer chain.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::chain::{ChainIter, StabChain};
use crate::error::{GroupError, Result};
use crate::limits;
use crate::par;
use crate::perm::Permutation;

const SCAN_CHUNK: u128 = 4096;

#[derive(Clone)]
pub struct PermutationGroup {
    inner: Arc<Inner>,
}

struct Inner {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
    order: u128,
}

impl fmt::Debug for PermutationGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermutationGroup")
            .field("degree", &self.degree())
            .field("order", &self.order())
            .field("generators", &self.generators())
            .finish()
    }
}

impl PermutationGroup {
    /// The closure of `gens` under composition, certified by a chain.
    /// An empty generator list gives the trivial group.
    pub fn generated(degree: usize, gens: &[Permutation]) -> Result<Self> {
        if degree == 0 {
            return Err(GroupError::Unsupported("degree must be positive".into()));
        }
        for g in gens {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        Self::closure(degree, gens.iter())
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_parts(degree, Vec::new(), StabChain::trivial(degree)).expect("trivial group has order 1")
    }

    /// Degree-checked closure; only elements that enlarge the group are kept
    /// as generators.
    pub(crate) fn closure<'a>(degree: usize, elements: impl IntoIterator<Item = &'a Permutation>) -> Result<Self> {
        let mut chain = StabChain::trivial(degree);
        let mut gens = Vec::new();
        for x in elements {
            debug_assert_eq!(x.degree(), degree);
            if chain.extend(x) {
                gens.push(x.clone());
            }
        }
        Self::from_parts(degree, gens, chain)
    }

    fn from_parts(degree: usize, generators: Vec<Permutation>, chain: StabChain) -> Result<Self> {
        let order = chain.order().ok_or(GroupError::OrderOverflow)?;
        Ok(PermutationGroup {
            inner: Arc::new(Inner {
                degree,
                generators,
                chain,
                order,
            }),
        })
    }

    /// Adds elements to this group's generators.
    pub fn join_elements(&self, extra: &[Permutation]) -> Result<Self> {
        let mut chain = self.inner.chain.clone();
        let mut gens = self.inner.generators.clone();
        for x in extra {
            self.check_degree(x)?;
            if chain.extend(x) {
                gens.push(x.clone());
            }
        }
        Self::from_parts(self.degree(), gens, chain)
    }

    pub fn join(&self, other: &PermutationGroup) -> Result<Self> {
        self.join_elements(other.generators())
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.generators
    }

    pub fn order(&self) -> u128 {
        self.inner.order
    }

    pub fn is_trivial(&self) -> bool {
        self.inner.order == 1
    }

    pub fn base(&self) -> Vec<usize> {
        self.inner.chain.base()
    }

    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.inner.chain.levels.iter().map(|l| l.orbit_len()).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.inner.chain.strong_generators()
    }

    pub(crate) fn chain(&self) -> &StabChain {
        &self.inner.chain
    }

    fn check_degree(&self, x: &Permutation) -> Result<()> {
        if x.degree() != self.degree() {
            return Err(GroupError::DegreeMismatch {
                expected: self.degree(),
                found: x.degree(),
            });
        }
        Ok(())
    }

    pub fn contains(&self, x: &Permutation) -> Result<bool> {
        self.check_degree(x)?;
        Ok(self.inner.chain.contains(x))
    }

    #[inline]
    pub(crate) fn has(&self, x: &Permutation) -> bool {
        self.inner.chain.contains(x)
    }

    pub fn is_subgroup_of(&self, other: &PermutationGroup) -> bool {
        self.degree() == other.degree()
            && other.order().is_multiple_of(self.order())
            && self.generators().iter().all(|g| other.has(g))
    }

    pub fn same_subgroup(&self, other: &PermutationGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree())
    }

    /// Prime factorization of the order, read off the basic orbit lengths.
    pub fn order_factorization(&self) -> BTreeMap<u64, u32> {
        let mut out = BTreeMap::new();
        for len in self.basic_orbit_lengths() {
            for (p, e) in crate::primes::factorize(len as u64) {
                *out.entry(p).or_insert(0) += e;
            }
        }
        out
    }

    pub fn prime_divisors(&self) -> Vec<u64> {
        self.order_factorization().keys().copied().collect()
    }

    /// Largest power of `p` dividing the order.
    pub fn p_part(&self, p: u64) -> u128 {
        let e = self.order_factorization().get(&p).copied().unwrap_or(0);
        (p as u128).pow(e)
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        self.p_part(p) == self.order()
    }

    fn check_budget(&self, what: &'static str) -> Result<()> {
        let limit = limits::enumeration_budget() as u128;
        if self.order() > limit {
            return Err(GroupError::BudgetExceeded {
                what,
                needed: self.order(),
                limit,
            });
        }
        Ok(())
    }

    /// Streams every element exactly once, in a fixed order.
    pub fn iter(&self) -> Result<impl Iterator<Item = Permutation> + '_> {
        self.check_budget("element enumeration")?;
        Ok(ChainIter::new(&self.inner.chain, 0, self.order()))
    }

    pub fn elements(&self) -> Result<Vec<Permutation>> {
        Ok(self.iter()?.collect())
    }

    pub fn sorted_elements(&self) -> Result<Vec<Permutation>> {
        let mut v = self.elements()?;
        v.sort_unstable();
        Ok(v)
    }

    /// Element number `index` in enumeration order.
    pub fn element_at(&self, index: u128) -> Permutation {
        let c = &self.inner.chain;
        c.element_from_digits(&c.digits_of_index(index % self.order()))
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let digits: Vec<usize> = self
            .inner
            .chain
            .levels
            .iter()
            .map(|l| rng.gen_range(0..l.orbit_len()))
            .collect();
        self.inner.chain.element_from_digits(&digits)
    }

    fn chunks(&self) -> (usize, u128) {
        let n = self.order();
        (n.div_ceil(SCAN_CHUNK) as usize, n)
    }

    /// Elements satisfying `pred`, in enumeration order.
    pub fn filter_elements<F>(&self, pred: F) -> Result<Vec<Permutation>>
    where
        F: Fn(&Permutation) -> bool + Sync + Send,
    {
        self.check_budget("element scan")?;
        let (n_chunks, n) = self.chunks();
        let chain = &self.inner.chain;
        let parts = par::map_range(n_chunks, |c| {
            let start = c as u128 * SCAN_CHUNK;
            let count = SCAN_CHUNK.min(n - start);
            ChainIter::new(chain, start, count)
                .filter(|x| pred(x))
                .collect::<Vec<_>>()
        });
        Ok(parts.into_iter().flatten().collect())
    }

    /// Number of elements satisfying `pred`.
    pub fn count_elements<F>(&self, pred: F) -> Result<u64>
    where
        F: Fn(&Permutation) -> bool + Sync + Send,
    {
        self.check_budget("element scan")?;
        let (n_chunks, n) = self.chunks();
        let chain = &self.inner.chain;
        Ok(par::sum_range(n_chunks, |c| {
            let start = c as u128 * SCAN_CHUNK;
            let count = SCAN_CHUNK.min(n - start);
            ChainIter::new(chain, start, count).filter(|x| pred(x)).count() as u64
        }))
    }

    /// First element (in enumeration order) mapped to `Some` by `f`.
    pub fn find_map_element<R, F>(&self, f: F) -> Result<Option<R>>
    where
        R: Send,
        F: Fn(&Permutation) -> Option<R> + Sync + Send,
    {
        self.check_budget("element scan")?;
        let (n_chunks, n) = self.chunks();
        let chain = &self.inner.chain;
        Ok(par::find_first(n_chunks, |c| {
            let start = c as u128 * SCAN_CHUNK;
            let count = SCAN_CHUNK.min(n - start);
            ChainIter::new(chain, start, count).find_map(|x| f(&x))
        }))
    }

    /// Subgroup generated by the elements satisfying `pred`; the predicate
    /// must describe a subgroup for the result to equal that set.
    pub fn subgroup_where<F>(&self, pred: F) -> Result<PermutationGroup>
    where
        F: Fn(&Permutation) -> bool + Sync + Send,
    {
        let members = self.filter_elements(pred)?;
        Self::closure(self.degree(), members.iter())
    }

    /// `{y ∈ G : xy = yx}`.
    pub fn centralizer(&self, x: &Permutation) -> Result<PermutationGroup> {
        if !self.contains(x)? {
            return Err(GroupError::NotAMember);
        }
        self.centralizer_of_element(x)
    }

    /// Centralizer of an arbitrary permutation of the same degree.
    pub(crate) fn centralizer_of_element(&self, x: &Permutation) -> Result<PermutationGroup> {
        if x.is_identity() || self.generators().iter().all(|g| g.commutes_with(x)) {
            return Ok(self.clone());
        }
        self.subgroup_where(|y| y.commutes_with(x))
    }

    /// Elements of `self` commuting with every element of `h`.
    pub fn centralizer_of_subgroup(&self, h: &PermutationGroup) -> Result<PermutationGroup> {
        if !h.is_subgroup_of(self) {
            return Err(GroupError::NotContained);
        }
        self.centralizer_of_set(h.generators())
    }

    pub(crate) fn centralizer_of_set(&self, xs: &[Permutation]) -> Result<PermutationGroup> {
        if xs.iter().all(|x| self.generators().iter().all(|g| g.commutes_with(x))) {
            return Ok(self.clone());
        }
        self.subgroup_where(|y| xs.iter().all(|x| y.commutes_with(x)))
    }

    /// `{x ∈ G : h^x = h}`.
    pub fn normalizer(&self, h: &PermutationGroup) -> Result<PermutationGroup> {
        if h.degree() != self.degree() {
            return Err(GroupError::DegreeMismatch {
                expected: self.degree(),
                found: h.degree(),
            });
        }
        if self.generators().iter().all(|x| normalizes(x, h)) {
            return Ok(self.clone());
        }
        self.subgroup_where(|x| normalizes(x, h))
    }

    /// `h^x`, generated by the conjugated generators of `h`.
    pub fn conjugate(&self, x: &Permutation) -> Result<PermutationGroup> {
        self.check_degree(x)?;
        let gens: Vec<_> = self.generators().iter().map(|g| g.conjugate_by(x)).collect();
        Self::closure(self.degree(), gens.iter())
    }

    /// True iff `n` is a normal subgroup of `self`.
    pub fn is_normal(&self, n: &PermutationGroup) -> Result<bool> {
        if !n.is_subgroup_of(self) {
            return Err(GroupError::NotContained);
        }
        Ok(self.generators().iter().all(|x| normalizes(x, n)))
    }

    /// Smallest normal subgroup of `self` containing `xs`.
    pub fn normal_closure_of(&self, xs: &[Permutation]) -> Result<PermutationGroup> {
        let mut chain = StabChain::trivial(self.degree());
        let mut gens: Vec<Permutation> = Vec::new();
        for x in xs {
            self.check_degree(x)?;
            if chain.extend(x) {
                gens.push(x.clone());
            }
        }
        let mut k = 0;
        while k < gens.len() {
            let y = gens[k].clone();
            for g in self.generators() {
                let c = y.conjugate_by(g);
                if chain.extend(&c) {
                    gens.push(c);
                }
            }
            k += 1;
        }
        Self::from_parts(self.degree(), gens, chain)
    }

    pub fn derived_subgroup(&self) -> Result<PermutationGroup> {
        let gens = self.generators();
        let mut comms = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                if !a.commutes_with(b) {
                    comms.push(a.commutator(b));
                }
            }
        }
        self.normal_closure_of(&comms)
    }

    /// `self ∩ other`, by filtering the smaller of the two.
    pub fn intersection(&self, other: &PermutationGroup) -> Result<PermutationGroup> {
        if other.degree() != self.degree() {
            return Err(GroupError::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        let (small, big) = if self.order() <= other.order() {
            (self, other)
        } else {
            (other, self)
        };
        if small.is_subgroup_of(big) {
            return Ok(small.clone());
        }
        small.subgroup_where(|x| big.has(x))
    }

    /// Core of `self` in `g`: the intersection of all `g`-conjugates.
    pub fn core_in(&self, g: &PermutationGroup) -> Result<PermutationGroup> {
        let mut core = self.clone();
        loop {
            let mut changed = false;
            for x in g.generators() {
                if normalizes(x, &core) {
                    continue;
                }
                let conj = core.conjugate(x)?;
                core = core.intersection(&conj)?;
                changed = true;
            }
            if !changed {
                return Ok(core);
            }
        }
    }

    /// Distinct conjugates of `self` under `g`, deduplicated by sorted
    /// element list. The first entry is `self`.
    pub fn conjugates_in(&self, g: &PermutationGroup) -> Result<Vec<PermutationGroup>> {
        let mut orbit = crate::sweep::ConjugateOrbit::new(g, self)?;
        while !orbit.step()? {}
        Ok(orbit.into_members().into_iter().map(|m| m.group).collect())
    }
}

/// `h^x = h`, tested on generators.
#[inline]
pub(crate) fn normalizes(x: &Permutation, h: &PermutationGroup) -> bool {
    h.generators().iter().all(|s| h.has(&s.conjugate_by(x)))
}

/// A subgroup paired with the ambient group it was taken from.
#[derive(Clone, Debug)]
pub struct SubgroupHandle {
    ambient: PermutationGroup,
    sub: PermutationGroup,
}

impl SubgroupHandle {
    pub fn new(ambient: &PermutationGroup, sub: &PermutationGroup) -> Result<Self> {
        if !sub.is_subgroup_of(ambient) {
            return Err(GroupError::NotContained);
        }
        Ok(SubgroupHandle {
            ambient: ambient.clone(),
            sub: sub.clone(),
        })
    }

    pub fn ambient(&self) -> &PermutationGroup {
        &self.ambient
    }

    pub fn sub(&self) -> &PermutationGroup {
        &self.sub
    }

    pub fn index(&self) -> u128 {
        self.ambient.order() / self.sub.order()
    }

    pub fn is_normal(&self) -> bool {
        self.ambient.generators().iter().all(|x| normalizes(x, &self.sub))
    }
}

/// Fingerprint of a subgroup: its sorted element list.
pub(crate) fn fingerprint(elements: &[Permutation]) -> Vec<Permutation> {
    let mut v = elements.to_vec();
    v.sort_unstable();
    v
}

/// Number of distinct elements in a set of permutations.
pub fn distinct_count(elements: &[Permutation]) -> usize {
    elements.iter().collect::<HashSet<_>>().len()
}
