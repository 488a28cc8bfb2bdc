//! Arithmetic tables for small finite fields GF(p^k).
//!
//! An element is encoded as the integer whose base-`p` digits are its
//! polynomial coefficients (constant term first). The modulus is the
//! smallest monic irreducible polynomial of degree `k` in that encoding.

use crate::error::{GroupError, Result};
use crate::primes::prime_power;

pub const MAX_FIELD_ORDER: u64 = 4096;

pub struct FiniteField {
    p: u64,
    k: u32,
    q: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
}

fn poly_from_code(mut code: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = vec![0; len];
    for c in out.iter_mut() {
        *c = code % p;
        code /= p;
    }
    out
}

fn poly_to_code(coeffs: &[u64], p: u64) -> u64 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Remainder of `a` modulo the monic polynomial `m` over GF(p).
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap() % p;
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p * p - lead * c % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        // every monic polynomial of degree d
        for code in 0..p.pow(d as u32) {
            let mut g = poly_from_code(code, p, d);
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    pub fn new(q: u64) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or_else(|| GroupError::Unsupported(format!("{q} is not a prime power")))?;
        if q > MAX_FIELD_ORDER {
            return Err(GroupError::Unsupported(format!(
                "field order {q} exceeds {MAX_FIELD_ORDER}"
            )));
        }
        let kk = k as usize;
        let modulus = (0..p.pow(k))
            .map(|code| {
                let mut f = poly_from_code(code, p, kk);
                f.push(1);
                f
            })
            .find(|f| is_irreducible(f, p))
            .expect("irreducible polynomials exist in every degree");
        let qs = q as usize;
        let mut add = vec![0u32; qs * qs];
        let mut mul = vec![0u32; qs * qs];
        for a in 0..q {
            let pa = poly_from_code(a, p, kk);
            for b in 0..q {
                let pb = poly_from_code(b, p, kk);
                let sum: Vec<u64> = pa.iter().zip(&pb).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = poly_to_code(&sum, p) as u32;
                let mut prod = vec![0u64; 2 * kk - 1];
                for (i, x) in pa.iter().enumerate() {
                    for (j, y) in pb.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let r = poly_rem(&prod, &modulus, p);
                mul[(a * q + b) as usize] = poly_to_code(&r, p) as u32;
            }
        }
        Ok(FiniteField { p, k, q: qs, add, mul })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.q).find(|&b| self.add(a, b) == 0).expect("additive inverse")
    }

    pub fn inv(&self, a: usize) -> Option<usize> {
        if a == 0 {
            return None;
        }
        (1..self.q).find(|&b| self.mul(a, b) == 1)
    }

    /// An additive basis: the monomials `1, x, ..., x^{k-1}`.
    pub fn additive_basis(&self) -> Vec<usize> {
        (0..self.k).map(|i| self.p.pow(i) as usize).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_field(q: u64) {
        let f = FiniteField::new(q).unwrap();
        let n = f.order();
        for a in 1..n {
            let inv = f.inv(a).expect("nonzero elements are invertible");
            assert_eq!(f.mul(a, inv), 1);
        }
        for a in 0..n {
            for b in 0..n {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in [0, 1, n - 1] {
                    let lhs = f.mul(a, f.add(b, c));
                    let rhs = f.add(f.mul(a, b), f.mul(a, c));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn small_fields_are_fields() {
        for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
            check_field(q);
        }
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert!(FiniteField::new(6).is_err());
        assert!(FiniteField::new(1).is_err());
    }
}
