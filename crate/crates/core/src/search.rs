//! Ground-truth oracles: exhaustive minimum distance, exact `A_λ(n, d)` and bound sandwiches.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use crate::ald::{ald_distance, EdgeCounts, Lambda, PairedWord};
use crate::budget::Budget;
use crate::codes::{self, CnSpec, Codebook, OddPrimeField};
use crate::delsarte::{self, MAX_LEN as DELSARTE_MAX_LEN};
use crate::error::{invalid, Error, Result};
use crate::hyperbound;
use crate::report::{BoundReport, BoundValue};

/// Largest number of pairs `min_distance` will examine.
pub const PAIR_LIMIT: u64 = 500_000_000;

/// Largest length for the exact search (`4^4 = 256` vertices).
pub const EXACT_MAX_LEN: usize = 4;

/// Minimum pairwise distance; `None` stands for infinity (fewer than two words).
pub fn min_distance(c: &Codebook, lambda: Lambda) -> Result<Option<u64>> {
    let words = c.words();
    let m = words.len() as u64;
    if m * m.saturating_sub(1) / 2 > PAIR_LIMIT {
        return Err(Error::BudgetExceeded(format!("{m} words exceed the pair limit")));
    }
    let best = (0..words.len())
        .into_par_iter()
        .filter_map(|i| {
            words[i + 1..]
                .iter()
                .map(|y| EdgeCounts::between(&words[i], y).map(|e| e.cost(lambda)).unwrap_or(u64::MAX))
                .min()
        })
        .min();
    Ok(best)
}

type Bits = [u64; 4];

fn has(b: &Bits, i: usize) -> bool {
    b[i >> 6] >> (i & 63) & 1 == 1
}

fn set(b: &mut Bits, i: usize) {
    b[i >> 6] |= 1 << (i & 63);
}

fn clear(b: &mut Bits, i: usize) {
    b[i >> 6] &= !(1 << (i & 63));
}

fn and(x: &Bits, y: &Bits) -> Bits {
    [x[0] & y[0], x[1] & y[1], x[2] & y[2], x[3] & y[3]]
}

fn first(b: &Bits) -> Option<usize> {
    (0..4).find(|&k| b[k] != 0).map(|k| k * 64 + b[k].trailing_zeros() as usize)
}

fn count(b: &Bits) -> usize {
    b.iter().map(|w| w.count_ones() as usize).sum()
}

/// Words as vertices, adjacent when `(d, λ)`-distinguishable.
#[derive(Debug, Clone)]
pub struct DistanceGraph {
    pub n: usize,
    pub lambda: Lambda,
    pub d: u64,
    pub vertices: Vec<PairedWord>,
    adjacency: Vec<Bits>,
}

impl DistanceGraph {
    pub fn new(n: usize, d: u64, lambda: Lambda) -> Result<DistanceGraph> {
        if n == 0 || n > EXACT_MAX_LEN {
            return Err(Error::BudgetExceeded(format!("distance graph on 4^{n} vertices")));
        }
        let vertices: Vec<PairedWord> = PairedWord::all(n)?.collect();
        let mut adjacency = vec![[0u64; 4]; vertices.len()];
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                if ald_distance(&vertices[i], &vertices[j], lambda)? >= d {
                    set(&mut adjacency[i], j);
                    set(&mut adjacency[j], i);
                }
            }
        }
        Ok(DistanceGraph { n, lambda, d, vertices, adjacency })
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        has(&self.adjacency[i], j)
    }

    pub fn degree(&self, i: usize) -> usize {
        count(&self.adjacency[i])
    }
}

struct CliqueSearch<'a> {
    adj: Vec<Bits>,
    best: Vec<usize>,
    budget: &'a Budget,
    nodes: u64,
}

impl CliqueSearch<'_> {
    /// Greedy colouring of `p` in index order; returns vertices by ascending colour.
    fn colour(&self, p: &Bits) -> Vec<(usize, usize)> {
        let mut uncoloured = *p;
        let mut out = Vec::with_capacity(count(p));
        let mut colour = 0;
        while count(&uncoloured) > 0 {
            colour += 1;
            let mut available = uncoloured;
            while let Some(v) = first(&available) {
                out.push((v, colour));
                clear(&mut uncoloured, v);
                clear(&mut available, v);
                available = and(&available, &complement(&self.adj[v]));
            }
        }
        out
    }

    fn expand(&mut self, clique: &mut Vec<usize>, mut p: Bits) -> Result<()> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) {
            self.budget.check("exact maximum code search")?;
        }
        if clique.len() > self.best.len() {
            self.best = clique.clone();
        }
        let order = self.colour(&p);
        for &(v, colour) in order.iter().rev() {
            if clique.len() + colour <= self.best.len() {
                return Ok(());
            }
            clique.push(v);
            self.expand(clique, and(&p, &self.adj[v]))?;
            clique.pop();
            clear(&mut p, v);
        }
        Ok(())
    }
}

fn complement(b: &Bits) -> Bits {
    [!b[0], !b[1], !b[2], !b[3]]
}

/// Exact `A_λ(n, d)` with a maximising codebook.
pub fn exact_max_code(n: usize, d: u64, lambda: Lambda) -> Result<(usize, Codebook)> {
    exact_max_code_within(n, d, lambda, &Budget::unlimited())
}

pub fn exact_max_code_within(n: usize, d: u64, lambda: Lambda, budget: &Budget) -> Result<(usize, Codebook)> {
    let g = DistanceGraph::new(n, d, lambda)?;
    // Relabel by descending degree, ties by index.
    let mut order: Vec<usize> = (0..g.vertices.len()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(g.degree(i)), i));
    let mut adj = vec![[0u64; 4]; order.len()];
    for (a, &i) in order.iter().enumerate() {
        for (b, &j) in order.iter().enumerate() {
            if g.adjacent(i, j) {
                set(&mut adj[a], b);
            }
        }
    }
    let position: Vec<usize> = {
        let mut pos = vec![0; order.len()];
        order.iter().enumerate().for_each(|(a, &i)| pos[i] = a);
        pos
    };
    let mut search = CliqueSearch { adj, best: Vec::new(), budget, nodes: 0 };
    // Coordinate permutations and complementation act transitively on each weight
    // class, so some optimum contains the class representative of its lightest word.
    for w in 0..=n {
        let rep = PairedWord::from_strands(n, 0, (1u64 << w) - 1)?;
        let root = position[rep.index() as usize];
        let mut p = search.adj[root];
        for (a, &i) in order.iter().enumerate() {
            if g.vertices[i].weight() < w {
                clear(&mut p, a);
            }
        }
        search.expand(&mut vec![root], p)?;
    }
    let mut words: Vec<PairedWord> = search.best.iter().map(|&v| g.vertices[order[v]]).collect();
    words.sort();
    let size = words.len();
    let params = BTreeMap::from([("search".to_string(), "exact".to_string())]);
    Ok((size, Codebook::new(n, lambda, d, "exact", params, words)?))
}

/// `⌈4^n / (d (n+1)^{⌊d/2⌋})⌉`.
pub fn table5_lower_bound(n: usize, d: u64) -> Result<BigUint> {
    if d == 0 {
        return Err(invalid("d must be positive"));
    }
    let num = BigUint::one() << (2 * n);
    let den = BigUint::from(d) * BigUint::from(n + 1).pow((d / 2) as u32);
    Ok(num.div_ceil(&den))
}

/// A constructed code that qualifies as a lower bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerWitness {
    pub construction: String,
    pub size: usize,
    pub min_distance: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct SandwichReport {
    pub n: usize,
    pub d: u64,
    pub lambda: Lambda,
    pub exact: usize,
    pub lower: Vec<LowerWitness>,
    pub upper: Vec<BoundReport>,
    pub notes: Vec<String>,
    pub violations: Vec<String>,
}

impl SandwichReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Constructions applicable at `(n, d, λ)` whose measured distance is at least `d`.
pub fn constructive_lower_bounds(n: usize, d: u64, lambda: Lambda) -> Result<Vec<LowerWitness>> {
    let mut books: Vec<Codebook> = vec![codes::build_cp(n)?, codes::build_clambda_greedy(n, d, lambda)?];
    if n == 2 {
        books.push(codes::build_cl(2, 0)?);
    }
    for q in [3u32, 5, 7] {
        if n == q as usize - 1 && d % 2 == 1 {
            if let Ok(spec) = CnSpec::new(OddPrimeField::new(q, 1)?, d) {
                books.push(codes::best_cn_coset(spec.field, d)?.codebook);
            }
        }
    }
    let mut out = vec![LowerWitness { construction: "single word".into(), size: 1, min_distance: None }];
    for b in books {
        let md = min_distance(&b, lambda)?;
        if md.is_none_or(|m| m >= d) {
            out.push(LowerWitness { construction: b.construction.clone(), size: b.len(), min_distance: md });
        }
    }
    Ok(out)
}

/// Every implemented upper bound that applies at `(n, d, λ)`, plus notes on bounds that declined.
pub fn upper_bounds(n: usize, d: u64, lambda: Lambda, budget: &Budget) -> Result<(Vec<BoundReport>, Vec<String>)> {
    let mut notes = Vec::new();
    let mut out = vec![
        hyperbound::lp_hypergraph_bound(n, d, lambda)?,
        hyperbound::naive_weight_bound(n, d, lambda)?,
        hyperbound::simple_bound(n, d, lambda)?,
    ];
    if d > 2 * lambda.class1() {
        out.push(hyperbound::optimal1_bound(n, lambda));
    }
    if lambda == Lambda::ONE && d >= 3 {
        // Nonnegativity of the dominant-diagonal weights is not guaranteed for large r.
        match hyperbound::weights1_bound(n, (d - 1) / 2) {
            Ok(b) => out.push(b),
            Err(Error::Internal(msg)) => notes.push(format!("weights1 skipped: {msg}")),
            Err(e) => return Err(e),
        }
    }
    if n <= DELSARTE_MAX_LEN {
        out.push(delsarte::delsarte_bound_within(n, d, lambda, budget)?);
    }
    Ok((out, notes))
}

/// Checks `lower <= A_λ(n, d) <= upper` for every construction and bound.
pub fn sandwich_check(n: usize, d: u64, lambda: Lambda, budget: &Budget) -> Result<SandwichReport> {
    let (exact, witness) = exact_max_code_within(n, d, lambda, budget)?;
    let mut violations = Vec::new();
    if min_distance(&witness, lambda)?.is_some_and(|m| m < d) {
        violations.push("exact witness violates the distance".to_string());
    }
    let lower = constructive_lower_bounds(n, d, lambda)?;
    for l in &lower {
        if l.size > exact {
            violations.push(format!("{} has {} words, above the exact {exact}", l.construction, l.size));
        }
    }
    let (upper, notes) = upper_bounds(n, d, lambda, budget)?;
    for u in &upper {
        if let BoundValue::Finite(v) = &u.value {
            if v.floor().to_usize().is_some_and(|f| f < exact) {
                violations.push(format!("{} bound {} is below the exact {exact}", u.method.name(), v));
            }
        }
    }
    Ok(SandwichReport { n, d, lambda, exact, lower, upper, notes, violations })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn min_distance_examples() {
        assert_eq!(min_distance(&codes::build_cp(2).unwrap(), Lambda::ONE).unwrap(), Some(2));
        assert_eq!(min_distance(&codes::build_cl(2, 0).unwrap(), Lambda::ONE).unwrap(), Some(3));
        let single =
            Codebook::new(1, Lambda::ONE, 9, "test", BTreeMap::new(), vec![PairedWord::zero(1).unwrap()]).unwrap();
        assert_eq!(min_distance(&single, Lambda::ONE).unwrap(), None);
    }

    #[test]
    fn exact_small_values() {
        assert_eq!(exact_max_code(1, 3, Lambda::ONE).unwrap().0, 2);
        assert_eq!(exact_max_code(1, 1, Lambda::ONE).unwrap().0, 4);
        assert_eq!(exact_max_code(2, 2, Lambda::ONE).unwrap().0, 10);
    }

    #[test]
    fn exact_is_deterministic() {
        let a = exact_max_code(2, 3, Lambda::ONE).unwrap().1;
        let b = exact_max_code(2, 3, Lambda::ONE).unwrap().1;
        assert_eq!(a, b);
    }

    #[test]
    fn lower_bound_formula() {
        assert_eq!(table5_lower_bound(5, 3).unwrap(), BigUint::from(57u32));
        assert_eq!(table5_lower_bound(10, 5).unwrap(), BigUint::from(1734u32));
        assert_eq!(table5_lower_bound(7, 7).unwrap(), BigUint::from(5u32));
    }

    #[test]
    fn oversize_search_refused() {
        assert!(matches!(exact_max_code(5, 3, Lambda::ONE), Err(Error::BudgetExceeded(_))));
    }
}
