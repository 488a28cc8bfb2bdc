//! Stabilizer chains built by deterministic Schreier–Sims.
//!
//! Level `l` holds the strong generators fixing the first `l` base points,
//! the basic orbit of `base[l]` under them and an explicit transversal with
//! inverses. New base points are always the smallest point moved by the
//! element that forced the new level.

use crate::perm::Permutation;

const ABSENT: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: u32,
    pub gens: Vec<Permutation>,
    pub orbit: Vec<u32>,
    /// point -> position in `orbit`, or `ABSENT`
    index: Vec<u32>,
    /// `reps[k]` maps `base` to `orbit[k]`
    pub reps: Vec<Permutation>,
    reps_inv: Vec<Permutation>,
}

impl Level {
    fn new(degree: usize, base: u32) -> Self {
        let mut level = Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            index: vec![ABSENT; degree],
            reps: Vec::new(),
            reps_inv: Vec::new(),
        };
        level.rebuild_orbit();
        level
    }

    fn rebuild_orbit(&mut self) {
        let degree = self.index.len();
        self.index.iter_mut().for_each(|x| *x = ABSENT);
        self.orbit.clear();
        self.reps.clear();
        self.reps_inv.clear();
        self.orbit.push(self.base);
        self.index[self.base as usize] = 0;
        self.reps.push(Permutation::identity(degree));
        self.reps_inv.push(Permutation::identity(degree));
        let mut k = 0;
        while k < self.orbit.len() {
            let pt = self.orbit[k] as usize;
            for s in &self.gens {
                let img = s.image(pt);
                if self.index[img] == ABSENT {
                    self.index[img] = self.orbit.len() as u32;
                    self.orbit.push(img as u32);
                    let rep = self.reps[k].then(s);
                    self.reps_inv.push(rep.inverse());
                    self.reps.push(rep);
                }
            }
            k += 1;
        }
    }

    #[inline]
    pub fn position(&self, point: usize) -> Option<usize> {
        match self.index[point] {
            ABSENT => None,
            k => Some(k as usize),
        }
    }

    pub fn orbit_len(&self) -> usize {
        self.orbit.len()
    }

    #[inline]
    pub fn rep_inv(&self, k: usize) -> &Permutation {
        &self.reps_inv[k]
    }
}

#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    degree: usize,
    pub levels: Vec<Level>,
}

impl StabChain {
    pub fn trivial(degree: usize) -> Self {
        StabChain {
            degree,
            levels: Vec::new(),
        }
    }

    /// Sifts `h` from level `from`; returns the residue and the level at
    /// which sifting stopped (`levels.len()` when every level was passed).
    pub fn strip(&self, h: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = h.clone();
        let mut scratch = h.clone();
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let b = h.image(level.base as usize);
            match level.position(b) {
                None => return (h, l),
                Some(k) => {
                    if k != 0 {
                        h.then_into(level.rep_inv(k), &mut scratch);
                        std::mem::swap(&mut h, &mut scratch);
                    }
                }
            }
        }
        let n = self.levels.len();
        (h, n)
    }

    pub fn contains(&self, h: &Permutation) -> bool {
        let mut h = h.clone();
        let mut scratch = h.clone();
        for level in &self.levels {
            let b = h.image(level.base as usize);
            match level.position(b) {
                None => return false,
                Some(0) => {}
                Some(k) => {
                    h.then_into(level.rep_inv(k), &mut scratch);
                    std::mem::swap(&mut h, &mut scratch);
                }
            }
        }
        h.is_identity()
    }

    /// Adds `g` to the group. Returns false when `g` was already a member.
    pub fn extend(&mut self, g: &Permutation) -> bool {
        let (h, j) = self.strip(g, 0);
        if h.is_identity() {
            return false;
        }
        self.add_strong_generator(h, 0, j);
        self.schreier_sims(j);
        true
    }

    /// Adds `h` to levels `first..=last`, creating level `last` if needed.
    fn add_strong_generator(&mut self, h: Permutation, first: usize, last: usize) {
        if last == self.levels.len() {
            let b = h.smallest_moved_point().expect("non-identity residue") as u32;
            self.levels.push(Level::new(self.degree, b));
        }
        for l in first..=last {
            self.levels[l].gens.push(h.clone());
            self.levels[l].rebuild_orbit();
        }
    }

    /// Completes the chain assuming levels above `start` already form a
    /// valid stabilizer chain for their groups.
    fn schreier_sims(&mut self, start: usize) {
        let mut i = start as isize;
        while i >= 0 {
            let lvl = i as usize;
            let mut found: Option<(Permutation, usize)> = None;
            'scan: for k in 0..self.levels[lvl].orbit_len() {
                for s_idx in 0..self.levels[lvl].gens.len() {
                    let level = &self.levels[lvl];
                    let s = &level.gens[s_idx];
                    let img = s.image(level.orbit[k] as usize);
                    let pos = level.position(img).expect("orbit closed under generators");
                    let sg = level.reps[k].then(s).then(level.rep_inv(pos));
                    if sg.is_identity() {
                        continue;
                    }
                    let (h, j) = self.strip(&sg, lvl + 1);
                    if !h.is_identity() {
                        found = Some((h, j));
                        break 'scan;
                    }
                }
            }
            match found {
                Some((h, j)) => {
                    self.add_strong_generator(h, lvl + 1, j);
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
    }

    /// Product of basic orbit lengths, or `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        self.levels
            .iter()
            .try_fold(1u128, |acc, l| acc.checked_mul(l.orbit_len() as u128))
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base as usize).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.levels.first().map(|l| l.gens.clone()).unwrap_or_default()
    }

    /// Element with the given transversal digits (level 0 first).
    pub fn element_from_digits(&self, digits: &[usize]) -> Permutation {
        let mut acc = Permutation::identity(self.degree);
        for (level, &d) in self.levels.iter().zip(digits).rev() {
            acc = acc.then(&level.reps[d]);
        }
        acc
    }

    pub fn digits_of_index(&self, mut index: u128) -> Vec<usize> {
        self.levels
            .iter()
            .map(|l| {
                let n = l.orbit_len() as u128;
                let d = (index % n) as usize;
                index /= n;
                d
            })
            .collect()
    }
}

/// Walks the elements of a chain in index order, one product per step.
pub(crate) struct ChainIter<'a> {
    chain: &'a StabChain,
    digits: Vec<usize>,
    /// `prefix[l]` is the product of the chosen reps for levels `l..`.
    prefix: Vec<Permutation>,
    remaining: u128,
}

impl<'a> ChainIter<'a> {
    pub fn new(chain: &'a StabChain, start: u128, count: u128) -> Self {
        let digits = chain.digits_of_index(start);
        let k = chain.levels.len();
        let mut prefix = vec![Permutation::identity(chain.degree); k + 1];
        for l in (0..k).rev() {
            prefix[l] = prefix[l + 1].then(&chain.levels[l].reps[digits[l]]);
        }
        ChainIter {
            chain,
            digits,
            prefix,
            remaining: count,
        }
    }

    fn advance(&mut self) {
        let k = self.chain.levels.len();
        let mut l = 0;
        while l < k {
            self.digits[l] += 1;
            if self.digits[l] < self.chain.levels[l].orbit_len() {
                break;
            }
            self.digits[l] = 0;
            l += 1;
        }
        if l == k {
            return;
        }
        for m in (0..=l).rev() {
            let (lo, hi) = self.prefix.split_at_mut(m + 1);
            hi[0].then_into(&self.chain.levels[m].reps[self.digits[m]], &mut lo[m]);
        }
    }
}

impl Iterator for ChainIter<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.remaining == 0 {
            return None;
        }
        let out = self.prefix[0].clone();
        self.remaining -= 1;
        if self.remaining > 0 {
            self.advance();
        }
        Some(out)
    }
}
