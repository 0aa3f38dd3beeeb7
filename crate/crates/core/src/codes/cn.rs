//! `C_N(n, u, z)`: a residue mod `d` plus power sums of the quaternary labels over `F_{q^ℓ}`.
//!
//! The label of `(a;b)` is `2a + b`; position `i` (1-based) carries `α^i`.

use std::collections::{BTreeMap, HashMap};

use super::prime_field::{FieldElem, OddPrimeField};
use super::{params, scan, Codebook, SCAN_LIMIT};
use crate::ald::{ald_distance, Lambda, PairedWord, Symbol};
use crate::error::{invalid, Error, Result};

/// Residue `u` and power sums `z_1..z_{⌊d/2⌋}`.
pub type Signature = (u64, Vec<FieldElem>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnSpec {
    pub field: OddPrimeField,
    pub d: u64,
}

impl CnSpec {
    pub fn new(field: OddPrimeField, d: u64) -> Result<CnSpec> {
        if d == 0 || d.is_multiple_of(2) {
            return Err(invalid(format!("C_N needs odd d, got {d}")));
        }
        if (field.q as u64) < d + 1 {
            return Err(invalid(format!("C_N needs q >= d + 1, got q = {} and d = {d}", field.q)));
        }
        Ok(CnSpec { field, d })
    }

    pub fn n(&self) -> usize {
        self.field.order() as usize - 1
    }

    pub fn power_sums(&self) -> usize {
        (self.d / 2) as usize
    }

    /// Signature of an integer label vector.
    pub fn signature_of_labels(&self, labels: &[i64]) -> Signature {
        let f = &self.field;
        let residue = labels.iter().sum::<i64>().rem_euclid(self.d as i64) as u64;
        let sums = (1..=self.power_sums() as u64)
            .map(|k| {
                labels
                    .iter()
                    .enumerate()
                    .fold(0, |acc, (i, &l)| f.add(acc, f.mul(f.from_int(l), f.alpha_pow((i as u64 + 1) * k))))
            })
            .collect();
        (residue, sums)
    }

    pub fn signature(&self, w: &PairedWord) -> Signature {
        let labels: Vec<i64> = w.symbols().map(|s| s.nat4() as i64).collect();
        self.signature_of_labels(&labels)
    }

    fn check_len(&self) -> Result<usize> {
        let n = self.n();
        if n > SCAN_LIMIT {
            return Err(Error::BudgetExceeded(format!("C_N of length {n} needs a 4^{n} scan")));
        }
        Ok(n)
    }
}

pub fn build_cn(field: OddPrimeField, d: u64, u: u64, z: &[FieldElem]) -> Result<Codebook> {
    let spec = CnSpec::new(field, d)?;
    let n = spec.check_len()?;
    if u >= d || z.len() != spec.power_sums() || z.iter().any(|&x| x >= spec.field.order()) {
        return Err(invalid("C_N coset label (u, z) out of range"));
    }
    let target: Signature = (u, z.to_vec());
    let words = scan(n, |w| spec.signature(w) == target)?;
    Codebook::new(n, Lambda::ONE, d, "cn", cn_params(&spec, u, z), words)
}

fn cn_params(spec: &CnSpec, u: u64, z: &[FieldElem]) -> BTreeMap<String, String> {
    let z = z.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    params([
        ("q", spec.field.q.to_string()),
        ("ell", spec.field.ell.to_string()),
        ("alpha", spec.field.alpha.to_string()),
        ("u", u.to_string()),
        ("z", z),
    ])
}

/// Every word of the space grouped by signature.
pub fn cn_census(spec: &CnSpec) -> Result<BTreeMap<Signature, Vec<PairedWord>>> {
    let n = spec.check_len()?;
    let mut out: BTreeMap<Signature, Vec<PairedWord>> = BTreeMap::new();
    for w in PairedWord::all(n)? {
        out.entry(spec.signature(&w)).or_default().push(w);
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct CnCoset {
    pub u: u64,
    pub z: Vec<FieldElem>,
    pub codebook: Codebook,
}

/// The largest coset; ties go to the smallest `(u, z)`.
pub fn best_cn_coset(field: OddPrimeField, d: u64) -> Result<CnCoset> {
    let spec = CnSpec::new(field, d)?;
    let census = cn_census(&spec)?;
    let ((u, z), words) = census
        .into_iter()
        .rev()
        .max_by_key(|(_, words)| words.len())
        .ok_or_else(|| Error::Internal("empty census".into()))?;
    let codebook = Codebook::new(spec.n(), Lambda::ONE, d, "cn", cn_params(&spec, u, &z), words)?;
    Ok(CnCoset { u, z, codebook })
}

/// Syndrome-table decoder for errors of ALD at most `⌊(d-1)/2⌋` at `λ = 1`.
///
/// The table maps each signature difference to the cheapest label-difference
/// pattern producing it. Decoded words are re-checked for membership and distance.
#[derive(Debug, Clone)]
pub struct CnDecoder {
    pub spec: CnSpec,
    pub target: Signature,
    table: HashMap<Signature, Vec<(usize, i64)>>,
}

/// Cheapest ALD (`λ = 1`) of a label change by `δ`.
fn delta_cost(delta: i64) -> u64 {
    match delta.abs() {
        1 => 1,
        2 => 2,
        _ => 4,
    }
}

impl CnDecoder {
    pub fn new(spec: CnSpec, u: u64, z: Vec<FieldElem>) -> Result<CnDecoder> {
        let n = spec.check_len()?;
        let t = (spec.d - 1) / 2;
        let mut patterns: Vec<(u64, Vec<(usize, i64)>)> = Vec::new();
        extend_patterns(n, t, 0, 0, &mut Vec::new(), &mut patterns);
        patterns.sort_by_key(|(cost, p)| (*cost, p.clone()));
        let mut table = HashMap::new();
        for (_, p) in patterns {
            let mut labels = vec![0i64; n];
            for &(i, delta) in &p {
                labels[i] = delta;
            }
            table.entry(spec.signature_of_labels(&labels)).or_insert(p);
        }
        Ok(CnDecoder { spec, target: (u, z), table })
    }

    pub fn decode(&self, received: &PairedWord) -> Result<PairedWord> {
        let (ru, rz) = self.spec.signature(received);
        let f = &self.spec.field;
        let du = (ru + self.spec.d - self.target.0) % self.spec.d;
        let dz: Vec<FieldElem> = rz.iter().zip(&self.target.1).map(|(&a, &b)| f.sub(a, b)).collect();
        let pattern = self.table.get(&(du, dz)).ok_or(Error::Uncorrectable)?;
        let mut symbols: Vec<Symbol> = received.symbols().collect();
        for &(i, delta) in pattern {
            let label = symbols[i].nat4() as i64 - delta;
            symbols[i] = u8::try_from(label).ok().and_then(Symbol::from_nat4).ok_or(Error::Uncorrectable)?;
        }
        let x = PairedWord::from_symbols(&symbols)?;
        let t = (self.spec.d - 1) / 2;
        if self.spec.signature(&x) != self.target || ald_distance(&x, received, Lambda::ONE)? > t {
            return Err(Error::Uncorrectable);
        }
        Ok(x)
    }
}

fn extend_patterns(
    n: usize,
    budget: u64,
    start: usize,
    spent: u64,
    cur: &mut Vec<(usize, i64)>,
    out: &mut Vec<(u64, Vec<(usize, i64)>)>,
) {
    out.push((spent, cur.clone()));
    for i in start..n {
        for delta in [-3i64, -2, -1, 1, 2, 3] {
            let c = delta_cost(delta);
            if spent + c <= budget {
                cur.push((i, delta));
                extend_patterns(n, budget, i + 1, spent + c, cur, out);
                cur.pop();
            }
        }
    }
}
