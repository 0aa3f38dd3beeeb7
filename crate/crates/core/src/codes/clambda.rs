//! `C_λ(n, d)` and its component codes.
//!
//! A word `(a;b)` is kept when the real sums `a_i + b_i` form a codeword of a
//! ternary Manhattan code and `S(a;b)` lies in a binary code of length `w(a;b)`.

use std::collections::{BTreeMap, HashSet};

use super::gf2::hamming_parity_check;
use super::{params, scan, Codebook};
use crate::ald::Lambda;
use crate::error::{invalid, Error, Result};

/// Largest binary component length.
pub const MAX_BINARY_LEN: usize = 24;

/// A binary code of length `len`; bit `k` is coordinate `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryCode {
    pub len: usize,
    pub words: Vec<u64>,
    set: HashSet<u64>,
}

impl BinaryCode {
    pub fn new(len: usize, words: Vec<u64>) -> Result<BinaryCode> {
        if len > MAX_BINARY_LEN {
            return Err(invalid(format!("binary component length {len} exceeds {MAX_BINARY_LEN}")));
        }
        let set: HashSet<u64> = words.iter().copied().collect();
        if set.len() != words.len() || words.iter().any(|&w| w >> len != 0) {
            return Err(invalid("binary code words must be distinct and fit the length"));
        }
        Ok(BinaryCode { len, words, set })
    }

    pub fn contains(&self, x: u64) -> bool {
        self.set.contains(&x)
    }

    /// Minimum Hamming distance; `None` for fewer than two words.
    pub fn min_distance(&self) -> Option<u32> {
        let w = &self.words;
        (0..w.len()).flat_map(|i| (i + 1..w.len()).map(move |j| (w[i] ^ w[j]).count_ones())).min()
    }
}

/// Greedy binary code: scan `0..2^len` and keep words at distance `>= d` from all kept ones.
pub fn lexicode(len: usize, d: u32) -> Result<BinaryCode> {
    if len > MAX_BINARY_LEN {
        return Err(invalid(format!("lexicode length {len} exceeds {MAX_BINARY_LEN}")));
    }
    let mut kept: Vec<u64> = Vec::new();
    for x in 0u64..1 << len {
        if kept.iter().all(|&y| (x ^ y).count_ones() >= d) {
            kept.push(x);
        }
    }
    BinaryCode::new(len, kept)
}

/// The largest coset of the (shortened) Hamming code of length `len`; ties go to the smallest syndrome.
pub fn hamming_best_coset(len: usize) -> Result<BinaryCode> {
    let h = hamming_parity_check(len)?;
    let mut cosets: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for x in 0u64..1 << len {
        cosets.entry(h.syndrome(x)).or_default().push(x);
    }
    let best = cosets.into_iter().rev().max_by_key(|(_, words)| words.len()).map(|(_, w)| w).unwrap_or_default();
    BinaryCode::new(len, best)
}

/// A code over `{0, 1, 2}` with the `ℓ1` metric (no wraparound).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryCode {
    pub n: usize,
    pub words: Vec<Vec<u8>>,
}

pub fn manhattan(x: &[u8], y: &[u8]) -> u32 {
    x.iter().zip(y).map(|(&a, &b)| a.abs_diff(b) as u32).sum()
}

impl TernaryCode {
    pub fn new(n: usize, words: Vec<Vec<u8>>) -> Result<TernaryCode> {
        if words.iter().any(|w| w.len() != n || w.iter().any(|&s| s > 2)) {
            return Err(invalid("ternary words must have length n and symbols in 0..=2"));
        }
        Ok(TernaryCode { n, words })
    }

    pub fn min_distance(&self) -> Option<u32> {
        let w = &self.words;
        (0..w.len()).flat_map(|i| (i + 1..w.len()).map(move |j| manhattan(&w[i], &w[j]))).min()
    }
}

/// Largest `n` for the `3^n` greedy scan.
pub const MAX_TERNARY_LEN: usize = 12;

/// Lexicographic greedy code with minimum `ℓ1` distance `d`.
pub fn greedy_manhattan_code(n: usize, d: u32) -> Result<TernaryCode> {
    if n > MAX_TERNARY_LEN {
        return Err(Error::BudgetExceeded(format!("greedy scan over 3^{n} words")));
    }
    let mut kept: Vec<Vec<u8>> = Vec::new();
    let mut x = vec![0u8; n];
    loop {
        if kept.iter().all(|y| manhattan(&x, y) >= d) {
            kept.push(x.clone());
        }
        // Next word in lexicographic order, last coordinate fastest.
        let Some(i) = x.iter().rposition(|&s| s < 2) else { break };
        x[i] += 1;
        x[i + 1..].fill(0);
    }
    TernaryCode::new(n, kept)
}

pub fn build_clambda(
    n: usize,
    d: u64,
    lambda: Lambda,
    cm: &TernaryCode,
    ch_family: &BTreeMap<usize, BinaryCode>,
) -> Result<Codebook> {
    if d == 0 || cm.n != n {
        return Err(invalid("C_λ needs d >= 1 and a ternary component of length n"));
    }
    let need_m = d.div_ceil(lambda.class2()) as u32;
    let need_h = d.div_ceil(lambda.class1()) as u32;
    if cm.min_distance().is_some_and(|m| m < need_m) {
        return Err(invalid(format!("ternary component has ℓ1 distance below {need_m}")));
    }
    for (&w, code) in ch_family {
        if code.len != w {
            return Err(invalid(format!("binary component for weight {w} has length {}", code.len)));
        }
        if code.min_distance().is_some_and(|m| m < need_h) {
            return Err(invalid(format!("binary component for weight {w} has distance below {need_h}")));
        }
    }
    let sums: HashSet<&[u8]> = cm.words.iter().map(Vec::as_slice).collect();
    let words = scan(n, |x| {
        let s: Vec<u8> = x.symbols().map(|t| t.a() + t.b()).collect();
        sums.contains(s.as_slice()) && ch_family.get(&x.weight()).is_some_and(|c| c.contains(x.split_subsequence()))
    })?;
    let p = params([("lambda", lambda.get().to_string()), ("d", d.to_string())]);
    Codebook::new(n, lambda, d, "clambda", p, words)
}

/// `C_λ` with a greedy Manhattan component and lexicode binary components.
pub fn build_clambda_greedy(n: usize, d: u64, lambda: Lambda) -> Result<Codebook> {
    let cm = greedy_manhattan_code(n, d.div_ceil(lambda.class2()) as u32)?;
    let need_h = d.div_ceil(lambda.class1()) as u32;
    let family = (0..=n).map(|w| Ok((w, lexicode(w, need_h)?))).collect::<Result<_>>()?;
    build_clambda(n, d, lambda, &cm, &family)
}
