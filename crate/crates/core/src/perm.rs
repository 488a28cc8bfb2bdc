//! Permutations of `{1..n}` stored as image maps.
//!
//! Products are read left to right: `a.compose(&b)` applies `a` first and
//! then `b`, so `(a * b)(i) = b(a(i))`. Conjugation follows the same
//! convention, `h^x = x⁻¹ h x`. Points are 0-based inside this module and
//! 1-based in cycle notation.

use std::fmt;
use std::ops::Mul;

use num_integer::Integer;

use crate::error::{GroupError, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(GroupError::InvalidPermutation("degree must be positive".into()));
        }
        let mut seen = vec![false; n];
        for &img in &images {
            let i = img as usize;
            if i >= n {
                return Err(GroupError::InvalidPermutation(format!(
                    "image {} out of range for degree {n}",
                    i + 1
                )));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(GroupError::InvalidPermutation(format!("image {} repeated", i + 1)));
            }
        }
        Ok(Permutation { images })
    }

    /// 1-based images, as in one-line notation.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let mut v = Vec::with_capacity(images.len());
        for &x in images {
            if x == 0 {
                return Err(GroupError::InvalidPermutation("point 0 in 1-based notation".into()));
            }
            v.push((x - 1) as u32);
        }
        Self::from_images(v)
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Permutation with the given disjoint cycles (0-based points).
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &pt) in cycle.iter().enumerate() {
                let i = pt as usize;
                if i >= degree {
                    return Err(GroupError::CycleSyntax(format!(
                        "point {} out of range 1..{degree}",
                        i + 1
                    )));
                }
                if std::mem::replace(&mut used[i], true) {
                    return Err(GroupError::CycleSyntax(format!("point {} repeated", i + 1)));
                }
                images[i] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses disjoint-cycle notation such as `(1 2 3)(4 5)`; commas between
    /// points are accepted, the empty string is the identity.
    pub fn parse_cycles(degree: usize, s: &str) -> Result<Self> {
        if degree == 0 {
            return Err(GroupError::CycleSyntax("degree must be positive".into()));
        }
        let mut cycles = Vec::new();
        let mut current: Option<Vec<u32>> = None;
        let mut number = String::new();
        let flush = |number: &mut String, current: &mut Option<Vec<u32>>| -> Result<()> {
            if number.is_empty() {
                return Ok(());
            }
            let v: usize = number
                .parse()
                .map_err(|_| GroupError::CycleSyntax(format!("bad point `{number}`")))?;
            number.clear();
            if v == 0 || v > degree {
                return Err(GroupError::CycleSyntax(format!("point {v} out of range 1..{degree}")));
            }
            match current {
                Some(c) => c.push((v - 1) as u32),
                None => return Err(GroupError::CycleSyntax(format!("point {v} outside a cycle"))),
            }
            Ok(())
        };
        for ch in s.chars() {
            match ch {
                '(' => {
                    if current.is_some() {
                        return Err(GroupError::CycleSyntax("nested parenthesis".into()));
                    }
                    current = Some(Vec::new());
                }
                ')' => {
                    flush(&mut number, &mut current)?;
                    match current.take() {
                        Some(c) => cycles.push(c),
                        None => return Err(GroupError::CycleSyntax("unbalanced `)`".into())),
                    }
                }
                d if d.is_ascii_digit() => number.push(d),
                c if c.is_whitespace() || c == ',' => flush(&mut number, &mut current)?,
                other => return Err(GroupError::CycleSyntax(format!("unexpected character `{other}`"))),
            }
        }
        if current.is_some() || !number.is_empty() {
            return Err(GroupError::CycleSyntax("unbalanced `(`".into()));
        }
        Self::from_cycles(degree, &cycles)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Apply `self`, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(GroupError::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    #[inline]
    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    /// Writes `self * other` into `out` without allocating.
    #[inline]
    pub(crate) fn then_into(&self, other: &Permutation, out: &mut Permutation) {
        for (o, &x) in out.images.iter_mut().zip(&self.images) {
            *o = other.images[x as usize];
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, exp: i64) -> Permutation {
        let mut base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    /// `x⁻¹ · self · x`.
    pub fn conjugate_by(&self, x: &Permutation) -> Permutation {
        let mut out = vec![0u32; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            out[x.images[i] as usize] = x.images[img as usize];
        }
        Permutation { images: out }
    }

    #[inline]
    pub fn commutes_with(&self, other: &Permutation) -> bool {
        let a = &self.images;
        let b = &other.images;
        a.iter().zip(b).all(|(&ai, &bi)| b[ai as usize] == a[bi as usize])
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse().then(&other.inverse()).then(self).then(other)
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p as u32);
                p = self.images[p] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Element order, the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut ord = 1u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                len += 1;
                p = self.images[p] as usize;
            }
            ord = ord.lcm(&len);
        }
        ord
    }

    pub fn smallest_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i)
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Copy of `self` acting on `offset..offset+degree` inside a larger domain.
    pub fn shifted(&self, offset: usize, total_degree: usize) -> Permutation {
        let mut images: Vec<u32> = (0..total_degree as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = offset as u32 + x;
        }
        Permutation { images }
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on degree mismatch; use [`Permutation::compose`] for a checked product.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in permutation product");
        self.then(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
