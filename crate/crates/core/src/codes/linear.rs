//! Linear constructions: `C_{l,u}` over `H_{0,1}` and `C_L` over a Hamming-distance check matrix.
//!
//! A paired word is treated as the `2n`-bit vector with strand `a` in the low
//! `n` bits and strand `b` above, so each code is a coset of a binary null space.

use num_bigint::BigUint;
use num_traits::Zero;

use super::gf2::{kernel_basis, span, BinaryParityCheck, MAX_LISTED_DIM};
use super::{params, Codebook};
use crate::ald::{Lambda, PairedWord};
use crate::error::{invalid, Error, Result};

/// The `v x (2^v - 2)` matrix of all nonzero columns except all-ones, in increasing order.
pub fn build_h01(v: u32) -> Result<BinaryParityCheck> {
    if !(2..=6).contains(&v) {
        return Err(invalid(format!("H01 is built for 2 <= v <= 6, got {v}")));
    }
    BinaryParityCheck::new(v as usize, (1..(1u64 << v) - 1).collect(), 3)
}

/// A coset `{x : M x = target}` of paired words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearPairCode {
    pub n: usize,
    /// `2n` columns: position `i` of strand `a` is column `i`, of strand `b` column `n + i`.
    pub check: BinaryParityCheck,
    pub target: u64,
}

impl LinearPairCode {
    pub fn new(n: usize, check: BinaryParityCheck, target: u64) -> Result<LinearPairCode> {
        if n == 0 || check.len() != 2 * n {
            return Err(invalid(format!("pair code of length {n} needs {} columns, got {}", 2 * n, check.len())));
        }
        if target >> check.rows != 0 {
            return Err(invalid("coset target has bits beyond the row count"));
        }
        Ok(LinearPairCode { n, check, target })
    }

    fn vector(w: &PairedWord) -> u64 {
        w.strand_a() | w.strand_b() << w.len()
    }

    fn word(&self, x: u64) -> PairedWord {
        let m = (1u64 << self.n) - 1;
        PairedWord::from_strands(self.n, x & m, x >> self.n).expect("length checked at construction")
    }

    pub fn syndrome(&self, w: &PairedWord) -> u64 {
        self.check.syndrome(Self::vector(w))
    }

    pub fn contains(&self, w: &PairedWord) -> bool {
        w.len() == self.n && self.syndrome(w) == self.target
    }

    pub fn dimension(&self) -> usize {
        2 * self.n - self.check.rank()
    }

    /// One member of the coset, if it is nonempty.
    pub fn representative(&self) -> Option<PairedWord> {
        let mut reduced: Vec<(u64, u64)> = Vec::new();
        for (j, &c) in self.check.columns.iter().enumerate() {
            let (mut x, mut combo) = (c, 1u64 << j);
            for &(p, pc) in &reduced {
                if x ^ p < x {
                    x ^= p;
                    combo ^= pc;
                }
            }
            if x != 0 {
                reduced.push((x, combo));
                reduced.sort_unstable_by_key(|p| std::cmp::Reverse(p.0));
            }
        }
        let (mut t, mut sol) = (self.target, 0u64);
        for &(p, pc) in &reduced {
            if t ^ p < t {
                t ^= p;
                sol ^= pc;
            }
        }
        (t == 0).then(|| self.word(sol))
    }

    pub fn size(&self) -> BigUint {
        if self.representative().is_none() {
            return BigUint::zero();
        }
        BigUint::from(1u32) << self.dimension()
    }

    /// All coset members, in Gray-code order of the kernel basis.
    pub fn words(&self) -> Result<Vec<PairedWord>> {
        let Some(rep) = self.representative() else { return Ok(Vec::new()) };
        let basis = kernel_basis(&self.check.columns);
        if basis.len() > MAX_LISTED_DIM {
            return Err(Error::BudgetExceeded(format!("code has dimension {}", basis.len())));
        }
        let r = Self::vector(&rep);
        Ok(span(&basis).into_iter().map(|k| self.word(r ^ k)).collect())
    }

    /// Member counts by pair weight, by dynamic programming over positions.
    pub fn weight_distribution(&self) -> Result<Vec<BigUint>> {
        let rows = self.check.rows;
        if rows > 20 {
            return Err(Error::BudgetExceeded(format!("weight census over 2^{rows} syndromes")));
        }
        let states = 1usize << rows;
        let mut table = vec![vec![BigUint::zero(); self.n + 1]; states];
        table[0][0] = BigUint::from(1u32);
        for i in 0..self.n {
            let (ca, cb) = (self.check.columns[i], self.check.columns[self.n + i]);
            let mut next = vec![vec![BigUint::zero(); self.n + 1]; states];
            for (s, row) in table.iter().enumerate() {
                for (w, count) in row.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                        let t = s as u64 ^ if a == 1 { ca } else { 0 } ^ if b == 1 { cb } else { 0 };
                        next[t as usize][w + (a ^ b) as usize] += count;
                    }
                }
            }
            table = next;
        }
        Ok(std::mem::take(&mut table[self.target as usize]))
    }

    pub fn to_codebook(&self, lambda: Lambda, d: u64, construction: &str) -> Result<Codebook> {
        let p = params([("rows", self.check.rows.to_string()), ("target", self.target.to_string())]);
        Codebook::new(self.n, lambda, d, construction, p, self.words()?)
    }
}

/// `C_{l,u}(2^v - 2)`: `Σ a_i h_i + Σ b_i 1_v = u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClCode {
    pub v: u32,
    pub u: u64,
    pub h01: BinaryParityCheck,
    pub code: LinearPairCode,
}

impl ClCode {
    pub fn new(v: u32, u: u64) -> Result<ClCode> {
        if !(2..=5).contains(&v) {
            return Err(invalid(format!("C_l is built for 2 <= v <= 5, got {v}")));
        }
        if u >> v != 0 {
            return Err(invalid(format!("u = {u} is not a vector of F_2^{v}")));
        }
        let h01 = build_h01(v)?;
        let n = h01.len();
        let ones = (1u64 << v) - 1;
        let columns = h01.columns.iter().copied().chain(std::iter::repeat_n(ones, n)).collect();
        let code = LinearPairCode::new(n, BinaryParityCheck::new(v as usize, columns, 3)?, u)?;
        Ok(ClCode { v, u, h01, code })
    }

    pub fn n(&self) -> usize {
        self.code.n
    }

    pub fn contains(&self, w: &PairedWord) -> bool {
        self.code.contains(w)
    }

    pub fn decode(&self, received: &PairedWord, mode: DecodeMode) -> Result<ClDecoded> {
        if received.len() != self.n() {
            return Err(Error::LengthMismatch { left: received.len(), right: self.n() });
        }
        let s = self.code.syndrome(received) ^ self.u;
        let ones = (1u64 << self.v) - 1;
        match mode {
            DecodeMode::DetectClass2 if s == 0 => Ok(ClDecoded::Clean(*received)),
            DecodeMode::DetectClass2 => Ok(ClDecoded::Detected { syndrome: s }),
            DecodeMode::CorrectClass1 => {
                let s_tilde = s ^ ones;
                if s_tilde == ones {
                    return Ok(ClDecoded::Clean(*received));
                }
                let j = self.h01.columns.iter().position(|&h| h == s_tilde).ok_or(Error::Uncorrectable)?;
                if received.support() >> j & 1 == 0 {
                    return Err(Error::Uncorrectable);
                }
                let bit = 1u64 << j;
                let word = PairedWord::from_strands(self.n(), received.strand_a() ^ bit, received.strand_b() ^ bit)?;
                Ok(ClDecoded::Corrected { word, position: j })
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecodeMode {
    CorrectClass1,
    DetectClass2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClDecoded {
    Clean(PairedWord),
    Corrected {
        word: PairedWord,
        position: usize,
    },
    /// A nonzero syndrome in detection mode.
    Detected {
        syndrome: u64,
    },
}

impl ClDecoded {
    /// The decoded codeword, unless only a detection flag was raised.
    pub fn word(&self) -> Option<PairedWord> {
        match self {
            ClDecoded::Clean(w) | ClDecoded::Corrected { word: w, .. } => Some(*w),
            ClDecoded::Detected { .. } => None,
        }
    }
}

pub fn build_cl(v: u32, u: u64) -> Result<Codebook> {
    let c = ClCode::new(v, u)?;
    let mut book = c.code.to_codebook(Lambda::ONE, 3, "cl")?;
    book.params = params([("v", v.to_string()), ("u", u.to_string())]);
    Ok(book)
}

pub fn decode_cl(v: u32, u: u64, received: &PairedWord, mode: DecodeMode) -> Result<ClDecoded> {
    ClCode::new(v, u)?.decode(received, mode)
}

/// `C_L(n)`: `Σ a_i h'_i + Σ b_i (h'_i + h'_{n+i}) = 0` for a check matrix of distance `d >= 4`.
pub fn build_big_cl(n: usize, h: &BinaryParityCheck) -> Result<LinearPairCode> {
    if h.len() != 2 * n {
        return Err(invalid(format!("C_L({n}) needs a check matrix with {} columns, got {}", 2 * n, h.len())));
    }
    if h.distance < 4 {
        return Err(invalid(format!("C_L needs Hamming distance at least 4, got {}", h.distance)));
    }
    let columns = (0..n).map(|i| h.columns[i]).chain((0..n).map(|i| h.columns[i] ^ h.columns[n + i])).collect();
    LinearPairCode::new(n, BinaryParityCheck::new(h.rows, columns, h.distance)?, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ald::ald_distance;
    use crate::codes::gf2::{bch_parity_check, hamming_parity_check};

    fn w(s: &str) -> PairedWord {
        let (a, b) = s.split_once(';').unwrap();
        let bits = |t: &str| t.bytes().map(|c| c - b'0').collect::<Vec<_>>();
        PairedWord::from_bits(&bits(a), &bits(b)).unwrap()
    }

    #[test]
    fn h01_shapes() {
        assert_eq!(build_h01(2).unwrap().columns, vec![1, 2]);
        let h = build_h01(3).unwrap();
        assert_eq!(h.len(), 6);
        assert!(!h.columns.contains(&7) && !h.columns.contains(&0));
    }

    #[test]
    fn cl_v2_members() {
        let mut got: Vec<_> = build_cl(2, 0).unwrap().words().to_vec();
        got.sort();
        let mut expected = vec![w("00;00"), w("00;11"), w("11;01"), w("11;10")];
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn cl_v3_size_and_cosets() {
        assert_eq!(build_cl(3, 0).unwrap().len(), 512);
        let total: usize = (0..8).map(|u| build_cl(3, u).unwrap().len()).sum();
        assert_eq!(total, 4096);
    }

    #[test]
    fn decoder_flips_class1_error() {
        let c = ClCode::new(3, 0).unwrap();
        let x = c.code.words().unwrap().into_iter().find(|x| x.support() >> 3 & 1 == 1).unwrap();
        let bit = 1 << 3;
        let y = PairedWord::from_strands(6, x.strand_a() ^ bit, x.strand_b() ^ bit).unwrap();
        assert_eq!(ald_distance(&x, &y, Lambda::ONE).unwrap(), 1);
        assert_eq!(c.decode(&y, DecodeMode::CorrectClass1).unwrap(), ClDecoded::Corrected { word: x, position: 3 });
        assert_eq!(c.decode(&x, DecodeMode::CorrectClass1).unwrap(), ClDecoded::Clean(x));
    }

    #[test]
    fn decoder_flags_strand_b_error() {
        let c = ClCode::new(3, 5).unwrap();
        let x = c.code.representative().unwrap();
        let y = PairedWord::from_strands(6, x.strand_a(), x.strand_b() ^ 1).unwrap();
        assert_eq!(c.decode(&y, DecodeMode::DetectClass2).unwrap(), ClDecoded::Detected { syndrome: 7 });
    }

    #[test]
    fn weight_distribution_matches_listing() {
        let c = ClCode::new(3, 6).unwrap();
        let dist = c.code.weight_distribution().unwrap();
        let mut counted = vec![BigUint::zero(); 7];
        for x in c.code.words().unwrap() {
            counted[x.weight()] += 1u32;
        }
        assert_eq!(dist, counted);
    }

    #[test]
    fn big_cl_preconditions() {
        let h3 = hamming_parity_check(6).unwrap();
        assert!(build_big_cl(3, &h3).is_err());
        assert!(build_big_cl(4, &bch_parity_check(4, 5).unwrap()).is_err());
        assert!(build_big_cl(7, &bch_parity_check(4, 5).unwrap()).is_ok());
    }
}
