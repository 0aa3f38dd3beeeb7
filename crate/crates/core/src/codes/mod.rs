//! ALD code constructions: `C_l`, `C_L`, `C_p`, the partition code, `C_N` and `C_λ`.
//!
//! Constructions are explicit word lists at desk scale. Each construction also
//! exposes a membership predicate that works without listing the code.

use std::collections::{BTreeMap, HashSet};

use crate::ald::{Lambda, PairedWord};
use crate::error::{invalid, Error, Result};

pub mod clambda;
pub mod cn;
pub mod gf2;
pub mod linear;
pub mod nonlinear;
pub mod prime_field;

pub use clambda::{
    build_clambda, build_clambda_greedy, greedy_manhattan_code, hamming_best_coset, lexicode, manhattan, BinaryCode,
    TernaryCode,
};
pub use cn::{best_cn_coset, build_cn, cn_census, CnCoset, CnDecoder, CnSpec, Signature};
pub use gf2::{bch_parity_check, hamming_parity_check, odd_weight_parity_check, BinaryParityCheck, Gf2m};
pub use linear::{build_big_cl, build_cl, build_h01, decode_cl, ClCode, ClDecoded, DecodeMode, LinearPairCode};
pub use nonlinear::{build_cp, build_partition_code, cp_contains, cp_size, PartitionCode};
pub use prime_field::{FieldElem, OddPrimeField};

/// Largest length whose `4^n` words are scanned to list a code.
pub const SCAN_LIMIT: usize = 10;

/// A list of distinct paired words of equal length with a design distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codebook {
    pub n: usize,
    pub lambda: Lambda,
    pub design_distance: u64,
    pub construction: String,
    pub params: BTreeMap<String, String>,
    words: Vec<PairedWord>,
}

impl Codebook {
    pub fn new(
        n: usize,
        lambda: Lambda,
        design_distance: u64,
        construction: impl Into<String>,
        params: BTreeMap<String, String>,
        words: Vec<PairedWord>,
    ) -> Result<Codebook> {
        let mut seen = HashSet::with_capacity(words.len());
        for w in &words {
            if w.len() != n {
                return Err(Error::LengthMismatch { left: w.len(), right: n });
            }
            if !seen.insert(*w) {
                return Err(invalid(format!("duplicate word {}", w.to_nat4_string())));
            }
        }
        Ok(Codebook { n, lambda, design_distance, construction: construction.into(), params, words })
    }

    pub fn words(&self) -> &[PairedWord] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &PairedWord) -> bool {
        self.words.contains(w)
    }
}

pub(crate) fn params<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// All words of length `n` accepted by `keep`, in index order.
pub(crate) fn scan(n: usize, keep: impl Fn(&PairedWord) -> bool) -> Result<Vec<PairedWord>> {
    if n > SCAN_LIMIT {
        return Err(Error::BudgetExceeded(format!("listing a length-{n} code scans 4^{n} words")));
    }
    Ok(PairedWord::all(n)?.filter(|w| keep(w)).collect())
}
