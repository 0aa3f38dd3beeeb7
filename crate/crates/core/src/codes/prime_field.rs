//! `F_{q^ℓ}` for an odd prime `q`, with elements as base-`q` digit vectors.

use crate::error::{invalid, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

/// An element, encoded as `Σ c_k q^k` for coefficients `c_k` of `x^k`.
pub type FieldElem = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddPrimeField {
    pub q: u32,
    pub ell: u32,
    /// Low coefficients of the monic modulus (degree `ell`); empty for `ell = 1`.
    pub modulus: Vec<u32>,
    pub alpha: FieldElem,
}

fn is_prime(q: u32) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

impl OddPrimeField {
    /// The field with the lexicographically first primitive modulus and, for
    /// `ell = 1`, the smallest primitive root.
    pub fn new(q: u32, ell: u32) -> Result<OddPrimeField> {
        if q.is_multiple_of(2) || !is_prime(q) {
            return Err(invalid(format!("q must be an odd prime, got {q}")));
        }
        if ell == 0 || (q as u64).checked_pow(ell).is_none_or(|o| o > MAX_ORDER) {
            return Err(invalid(format!("field order {q}^{ell} is unsupported")));
        }
        if ell == 1 {
            let mut f = OddPrimeField { q, ell, modulus: Vec::new(), alpha: 1 };
            f.alpha = (2..q).find(|&g| f.is_primitive(g)).unwrap_or(1);
            return Ok(f);
        }
        let count = q.pow(ell);
        for code in 0..count {
            let modulus: Vec<u32> = (0..ell).map(|k| code / q.pow(k) % q).collect();
            if modulus[0] == 0 {
                continue;
            }
            let f = OddPrimeField { q, ell, modulus, alpha: q };
            if f.is_primitive(q) {
                return Ok(f);
            }
        }
        Err(invalid(format!("no primitive polynomial of degree {ell} over F_{q}")))
    }

    pub fn order(&self) -> u32 {
        self.q.pow(self.ell)
    }

    fn digits(&self, x: FieldElem) -> Vec<u32> {
        (0..self.ell).map(|k| x / self.q.pow(k) % self.q).collect()
    }

    fn pack(&self, d: &[u32]) -> FieldElem {
        d.iter().rev().fold(0, |acc, &c| acc * self.q + c)
    }

    pub fn from_int(&self, v: i64) -> FieldElem {
        v.rem_euclid(self.q as i64) as u32
    }

    pub fn add(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        let (a, b) = (self.digits(x), self.digits(y));
        self.pack(&a.iter().zip(&b).map(|(u, v)| (u + v) % self.q).collect::<Vec<_>>())
    }

    pub fn neg(&self, x: FieldElem) -> FieldElem {
        self.pack(&self.digits(x).iter().map(|&u| (self.q - u) % self.q).collect::<Vec<_>>())
    }

    pub fn sub(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        let q = self.q as u64;
        let ell = self.ell as usize;
        let (a, b) = (self.digits(x), self.digits(y));
        let mut prod = vec![0u64; 2 * ell];
        for i in 0..ell {
            for j in 0..ell {
                prod[i + j] = (prod[i + j] + a[i] as u64 * b[j] as u64) % q;
            }
        }
        // x^ell = -Σ m_k x^k
        for k in (ell..2 * ell).rev() {
            let t = prod[k];
            prod[k] = 0;
            for (i, &m) in self.modulus.iter().enumerate() {
                prod[k - ell + i] = (prod[k - ell + i] + (q - m as u64) * t) % q;
            }
        }
        self.pack(&prod[..ell].iter().map(|&c| c as u32).collect::<Vec<_>>())
    }

    pub fn pow(&self, x: FieldElem, mut e: u64) -> FieldElem {
        let mut result = 1;
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    /// `α^e`, reduced modulo the group order.
    pub fn alpha_pow(&self, e: u64) -> FieldElem {
        self.pow(self.alpha, e % (self.order() as u64 - 1))
    }

    /// Whether `g` generates the multiplicative group.
    pub fn is_primitive(&self, g: FieldElem) -> bool {
        let order = self.order() as u64 - 1;
        if g == 0 {
            return false;
        }
        let mut m = order;
        let mut factors = Vec::new();
        let mut p = 2;
        while p * p <= m {
            if m.is_multiple_of(p) {
                factors.push(p);
                while m.is_multiple_of(p) {
                    m /= p;
                }
            }
            p += 1;
        }
        if m > 1 {
            factors.push(m);
        }
        self.pow(g, order) == 1 && factors.iter().all(|&f| self.pow(g, order / f) != 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f5_has_primitive_root_two() {
        let f = OddPrimeField::new(5, 1).unwrap();
        assert_eq!(f.alpha, 2);
        let powers: Vec<_> = (1..=4).map(|i| f.alpha_pow(i)).collect();
        assert_eq!(powers, vec![2, 4, 3, 1]);
    }

    #[test]
    fn extension_field_alpha_generates() {
        for (q, ell) in [(3, 2), (3, 3), (5, 2), (7, 2)] {
            let f = OddPrimeField::new(q, ell).unwrap();
            let n = f.order() as u64 - 1;
            let mut seen: Vec<_> = (0..n).map(|i| f.alpha_pow(i)).collect();
            seen.sort_unstable();
            seen.dedup();
            assert_eq!(seen.len() as u64, n, "q = {q}, ell = {ell}");
        }
    }

    #[test]
    fn field_axioms_small() {
        let f = OddPrimeField::new(3, 2).unwrap();
        for x in 0..9 {
            assert_eq!(f.add(x, f.neg(x)), 0);
            for y in 0..9 {
                assert_eq!(f.mul(x, y), f.mul(y, x));
                for z in 0..9 {
                    assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                }
            }
        }
    }

    #[test]
    fn rejects_bad_characteristic() {
        assert!(OddPrimeField::new(2, 1).is_err());
        assert!(OddPrimeField::new(9, 1).is_err());
        assert!(OddPrimeField::new(3, 0).is_err());
    }
}
