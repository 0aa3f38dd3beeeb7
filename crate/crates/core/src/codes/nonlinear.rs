//! The parity code `C_p` and the weight-partition code `C(2^v - 2)`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::clambda::{hamming_best_coset, BinaryCode};
use super::linear::ClCode;
use super::{params, scan, Codebook};
use crate::ald::{Lambda, PairedWord};
use crate::ball::binomial;
use crate::error::{invalid, Result};

/// `|C_p(n)| = 2^{2n-1} + 2^{n-1}`.
pub fn cp_size(n: usize) -> BigUint {
    (BigUint::one() << (2 * n - 1)) + (BigUint::one() << (n - 1))
}

/// Words with even strand-`a` parity and positive pair weight, plus all weight-zero words.
pub fn cp_contains(w: &PairedWord) -> bool {
    w.weight() == 0 || w.strand_a().count_ones().is_multiple_of(2)
}

pub fn build_cp(n: usize) -> Result<Codebook> {
    if n == 0 {
        return Err(invalid("C_p needs n >= 1"));
    }
    let words = scan(n, cp_contains)?;
    Codebook::new(n, Lambda::ONE, 2, "cp", params([("n", n.to_string())]), words)
}

/// Odd weights up to 7 checked by a Hamming coset on `S(a;b)`; weights from 9 up by `C_{l,u}`.
#[derive(Debug, Clone)]
pub struct PartitionCode {
    pub v: u32,
    pub u: u64,
    pub cl: ClCode,
    /// The distance-3 component for each odd weight `w <= min(7, n)`.
    pub components: BTreeMap<usize, BinaryCode>,
}

pub const SMALL_WEIGHTS: [usize; 4] = [1, 3, 5, 7];
pub const LARGE_WEIGHT_START: usize = 9;

impl PartitionCode {
    pub fn n(&self) -> usize {
        self.cl.n()
    }

    pub fn contains(&self, x: &PairedWord) -> bool {
        let w = x.weight();
        if x.len() != self.n() {
            return false;
        }
        match self.components.get(&w) {
            Some(code) => code.contains(x.split_subsequence()),
            None => w >= LARGE_WEIGHT_START && self.cl.contains(x),
        }
    }

    /// Exact size: weight classes from 9 up are counted in `C_{l,u}` by weight.
    pub fn size(&self) -> Result<BigUint> {
        let n = self.n();
        let mut total = BigUint::zero();
        for (&w, code) in &self.components {
            total += (binomial(n, w) * BigUint::from(code.words.len())) << (n - w);
        }
        let dist = self.cl.code.weight_distribution()?;
        for c in dist.iter().skip(LARGE_WEIGHT_START) {
            total += c;
        }
        Ok(total)
    }

    pub fn codebook(&self) -> Result<Codebook> {
        let words = scan(self.n(), |x| self.contains(x))?;
        let p = params([("v", self.v.to_string()), ("u", self.u.to_string())]);
        Codebook::new(self.n(), Lambda::ONE, 3, "partition", p, words)
    }
}

pub fn build_partition_code(v: u32, u: u64) -> Result<PartitionCode> {
    let cl = ClCode::new(v, u)?;
    let n = cl.n();
    let components =
        SMALL_WEIGHTS.iter().filter(|&&w| w <= n).map(|&w| Ok((w, hamming_best_coset(w)?))).collect::<Result<_>>()?;
    Ok(PartitionCode { v, u, cl, components })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cp_small_sizes() {
        let c1 = build_cp(1).unwrap();
        let mut got: Vec<_> = c1.words().iter().map(|w| w.to_nat4_string()).collect();
        got.sort();
        assert_eq!(got, vec!["0", "1", "3"]);
        for n in 1..=6 {
            assert_eq!(BigUint::from(build_cp(n).unwrap().len()), cp_size(n), "n = {n}");
        }
    }

    #[test]
    fn partition_v3_has_no_large_class() {
        let p = build_partition_code(3, 0).unwrap();
        let book = p.codebook().unwrap();
        assert_eq!(BigUint::from(book.len()), p.size().unwrap());
        assert!(book.words().iter().all(|w| w.weight() % 2 == 1));
        // 6*32*1 + 20*8*2 + 6*2*4
        assert_eq!(book.len(), 560);
    }

    #[test]
    fn even_weights_excluded() {
        let p = build_partition_code(4, 3).unwrap();
        let x = PairedWord::from_strands(14, 0b11, 0).unwrap();
        assert_eq!(x.weight(), 2);
        assert!(!p.contains(&x));
    }
}
