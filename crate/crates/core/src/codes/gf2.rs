//! Binary parity-check matrices and `GF(2^v)` arithmetic.

use crate::error::{invalid, Error, Result};

/// A binary matrix stored by columns; bit `k` of a column is row `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryParityCheck {
    pub rows: usize,
    pub columns: Vec<u64>,
    /// Claimed minimum Hamming distance of the null-space code.
    pub distance: u32,
}

/// Largest null-space dimension for which codewords are listed.
pub const MAX_LISTED_DIM: usize = 24;

impl BinaryParityCheck {
    pub fn new(rows: usize, columns: Vec<u64>, distance: u32) -> Result<BinaryParityCheck> {
        if rows == 0 || rows > 64 {
            return Err(invalid(format!("row count must be in 1..=64, got {rows}")));
        }
        let limit = if rows == 64 { u64::MAX } else { (1u64 << rows) - 1 };
        if columns.iter().any(|&c| c & !limit != 0) {
            return Err(invalid("column has bits beyond the row count"));
        }
        if columns.len() > 64 {
            return Err(invalid("at most 64 columns are supported"));
        }
        Ok(BinaryParityCheck { rows, columns, distance })
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// `H x` for the column selection `x` (bit `j` picks column `j`).
    pub fn syndrome(&self, x: u64) -> u64 {
        self.columns.iter().enumerate().filter(|(j, _)| x >> j & 1 == 1).fold(0, |acc, (_, c)| acc ^ c)
    }

    pub fn rank(&self) -> usize {
        rank_of(&self.columns)
    }

    /// A basis of the null space, as column selections.
    pub fn kernel_basis(&self) -> Vec<u64> {
        kernel_basis(&self.columns)
    }

    /// All null-space words, listed from the kernel basis.
    pub fn null_space(&self) -> Result<Vec<u64>> {
        let basis = self.kernel_basis();
        if basis.len() > MAX_LISTED_DIM {
            return Err(Error::BudgetExceeded(format!("null space has dimension {}", basis.len())));
        }
        Ok(span(&basis))
    }

    /// Exact minimum nonzero weight of the null space; `None` if it is trivial.
    pub fn null_space_distance(&self) -> Result<Option<u32>> {
        Ok(self.null_space()?.into_iter().filter(|&x| x != 0).map(u64::count_ones).min())
    }
}

/// All `F_2` combinations of `basis`, in Gray-code order starting at zero.
pub fn span(basis: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(1 << basis.len());
    let mut cur = 0u64;
    out.push(cur);
    for i in 1u64..1 << basis.len() {
        cur ^= basis[i.trailing_zeros() as usize];
        out.push(cur);
    }
    out
}

/// Rank of a set of vectors over `F_2`.
pub fn rank_of(vectors: &[u64]) -> usize {
    let mut pivots: Vec<u64> = Vec::new();
    for &v in vectors {
        let mut x = v;
        for &p in &pivots {
            x = x.min(x ^ p);
        }
        if x != 0 {
            pivots.push(x);
            pivots.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    pivots.len()
}

/// Null-space basis of the matrix with the given columns.
pub fn kernel_basis(columns: &[u64]) -> Vec<u64> {
    // Reduce columns while tracking which original columns were combined.
    let mut reduced: Vec<(u64, u64)> = Vec::new();
    let mut basis = Vec::new();
    for (j, &c) in columns.iter().enumerate() {
        let mut x = c;
        let mut combo = 1u64 << j;
        for &(p, pc) in &reduced {
            if x ^ p < x {
                x ^= p;
                combo ^= pc;
            }
        }
        if x == 0 {
            basis.push(combo);
        } else {
            reduced.push((x, combo));
            reduced.sort_unstable_by_key(|p| std::cmp::Reverse(p.0));
        }
    }
    basis
}

/// Primitive polynomials over `F_2` (bit `k` is the coefficient of `x^k`).
const PRIMITIVE: [u32; 15] =
    [0x7, 0xB, 0x13, 0x25, 0x43, 0x89, 0x11D, 0x211, 0x409, 0x805, 0x1053, 0x201B, 0x4443, 0x8003, 0x1100B];

/// `GF(2^v)` via a fixed primitive polynomial; `x` is the primitive element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gf2m {
    pub v: u32,
    pub modulus: u32,
}

impl Gf2m {
    pub fn new(v: u32) -> Result<Gf2m> {
        if !(2..=16).contains(&v) {
            return Err(invalid(format!("GF(2^v) supported for 2 <= v <= 16, got {v}")));
        }
        Ok(Gf2m { v, modulus: PRIMITIVE[v as usize - 2] })
    }

    pub fn order(&self) -> u64 {
        (1u64 << self.v) - 1
    }

    pub fn mul(&self, mut x: u32, mut y: u32) -> u32 {
        let mut acc = 0;
        while y != 0 {
            if y & 1 == 1 {
                acc ^= x;
            }
            y >>= 1;
            x <<= 1;
            if x >> self.v & 1 == 1 {
                x ^= self.modulus;
            }
        }
        acc
    }

    /// `α^e` with `α = x`.
    pub fn alpha_pow(&self, e: u64) -> u32 {
        let mut result = 1;
        let mut base = 2;
        let mut e = e % self.order();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }
}

/// Shortened primitive BCH check matrix with `2^v - 2` columns.
///
/// `d = 3` uses columns `α^i`; `d = 5` stacks `α^i` over `α^{3i}`. The last
/// column of the length `2^v - 1` code is dropped.
pub fn bch_parity_check(v: u32, d: u32) -> Result<BinaryParityCheck> {
    let field = Gf2m::new(v)?;
    let len = (1u64 << v) - 2;
    if len > 64 {
        return Err(invalid(format!("2^v - 2 = {len} columns exceed the 64-column limit")));
    }
    let columns: Vec<u64> = match d {
        3 => (0..len).map(|i| field.alpha_pow(i) as u64).collect(),
        5 => (0..len).map(|i| field.alpha_pow(i) as u64 | (field.alpha_pow(3 * i) as u64) << v).collect(),
        _ => return Err(invalid(format!("BCH check matrices are provided for d in {{3, 5}}, got {d}"))),
    };
    let rows = if d == 3 { v } else { 2 * v } as usize;
    BinaryParityCheck::new(rows, columns, d)
}

/// Check matrix of the (shortened) Hamming code of length `len`: columns `1..=len`.
pub fn hamming_parity_check(len: usize) -> Result<BinaryParityCheck> {
    if len == 0 || len > 63 {
        return Err(invalid(format!("Hamming length must be in 1..=63, got {len}")));
    }
    let rows = (usize::BITS - len.leading_zeros()) as usize;
    BinaryParityCheck::new(rows, (1..=len as u64).collect(), 3)
}

/// Distinct odd-weight columns of the given height, in increasing order.
///
/// No one, two or three of them sum to zero, so the null space has distance at least 4.
pub fn odd_weight_parity_check(rows: usize, cols: usize) -> Result<BinaryParityCheck> {
    if rows == 0 || rows > 20 {
        return Err(invalid(format!("odd-weight matrix rows must be in 1..=20, got {rows}")));
    }
    let columns: Vec<u64> = (1u64..1 << rows).filter(|c| c.count_ones() % 2 == 1).take(cols).collect();
    if columns.len() < cols {
        return Err(invalid(format!("only {} odd-weight columns of height {rows}", columns.len())));
    }
    BinaryParityCheck::new(rows, columns, 4)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_polynomials_are_primitive() {
        for v in 2..=16 {
            let f = Gf2m::new(v).unwrap();
            let mut x = 1u32;
            for e in 1..=f.order() {
                x = f.mul(x, 2);
                assert_eq!(x == 1, e == f.order(), "v = {v}, e = {e}");
            }
        }
    }

    #[test]
    fn bch_d3_v3() {
        let h = bch_parity_check(3, 3).unwrap();
        assert_eq!((h.rows, h.len()), (3, 6));
        assert_eq!(h.null_space_distance().unwrap(), Some(3));
    }

    #[test]
    fn bch_d5_v4() {
        let h = bch_parity_check(4, 5).unwrap();
        assert_eq!((h.rows, h.len()), (8, 14));
        assert_eq!(h.kernel_basis().len(), 6);
        assert!(h.null_space_distance().unwrap().unwrap() >= 5);
    }

    #[test]
    fn bch_columns_distinct_nonzero() {
        for v in 3..=6 {
            for d in [3, 5] {
                let h = bch_parity_check(v, d).unwrap();
                let mut c = h.columns.clone();
                c.sort_unstable();
                c.dedup();
                assert_eq!(c.len(), h.len());
                assert!(!c.contains(&0));
            }
        }
    }

    #[test]
    fn kernel_vectors_are_in_null_space() {
        let h = odd_weight_parity_check(7, 14).unwrap();
        let basis = h.kernel_basis();
        assert_eq!(basis.len() + h.rank(), 14);
        assert!(basis.iter().all(|&x| h.syndrome(x) == 0));
        assert!(h.null_space_distance().unwrap().unwrap() >= 4);
    }

    #[test]
    fn hamming_shapes() {
        assert_eq!(hamming_parity_check(1).unwrap().rows, 1);
        assert_eq!(hamming_parity_check(3).unwrap().rows, 2);
        assert_eq!(hamming_parity_check(5).unwrap().rows, 3);
        assert_eq!(hamming_parity_check(7).unwrap().null_space_distance().unwrap(), Some(3));
    }
}
