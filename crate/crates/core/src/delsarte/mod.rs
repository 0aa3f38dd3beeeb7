//! Delsarte linear-programming bound through the embedding of paired words
//! into `Z₁₀ⁿ`.
//!
//! The symbol map `(0;0)->0, (0;1)->1, (1;0)->9, (1;1)->5` turns every
//! coordinate difference into an element of `Z₁₀` whose class determines the
//! ALD edge weight. Distance distributions are indexed by profiles (symbol
//! counts) and the dual constraints come from expanding
//! `F(m) = Π_j (Σ_i z_i χ(i,j))^{m_j}` coefficient by coefficient.
//!
//! Individual coefficients are complex. Identifying `w[m]` with `w[rev m]`
//! (where `rev` negates every symbol) makes each aggregated coefficient real,
//! and real elements of the cyclotomic field lie in `Q(sqrt 5)`, so the LP is
//! solved exactly over that field.

mod cyclotomic;

use std::collections::HashMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::ald::Lambda;
use crate::budget::Budget;
use crate::error::{invalid, Error, Result};
use crate::lp::{self, LpOutcome, LpProblem, Relation, Sense};
use crate::report::{BoundReport, BoundValue, ExactValue, Method};
use crate::sqrt5::Sqrt5;

pub use cyclotomic::{chi, Coeff, Cyclotomic10};

/// Largest length accepted; the LP has `C(n+9, 9)` rows.
pub const MAX_LEN: usize = 6;

/// Counts of each `Z₁₀` symbol in a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Profile(pub [u8; 10]);

impl Profile {
    pub fn identity(n: usize) -> Profile {
        let mut m = [0u8; 10];
        m[0] = n as u8;
        Profile(m)
    }

    pub fn of_word(word: &[u8]) -> Result<Profile> {
        let mut m = [0u8; 10];
        for &s in word {
            if s >= 10 {
                return Err(invalid(format!("symbol {s} is not in Z10")));
            }
            m[s as usize] += 1;
        }
        Ok(Profile(m))
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|&c| c as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn count(&self, symbol: usize) -> u8 {
        self.0[symbol]
    }

    /// Profile of the negated word: index `i` moves to `(10 - i) mod 10`.
    pub fn reverse(&self) -> Profile {
        let mut m = [0u8; 10];
        for (i, &c) in self.0.iter().enumerate() {
            m[(10 - i) % 10] = c;
        }
        Profile(m)
    }

    /// Smaller of the profile and its reverse.
    pub fn canonical(&self) -> Profile {
        (*self).min(self.reverse())
    }

    /// ALD cost of a difference with this profile.
    pub fn cost(&self, lambda: Lambda) -> u64 {
        let m = |i: usize| self.0[i] as u64;
        lambda.class2() * (m(1) + m(4) + m(6) + m(9)) + lambda.class1() * (m(2) + m(8)) + lambda.class3() * m(5)
    }

    /// Whether a difference of two embedded words can have this profile.
    pub fn is_realizable(&self) -> bool {
        self.0[3] == 0 && self.0[7] == 0
    }

    /// All profiles of length `n`, in lexicographic order.
    pub fn all(n: usize) -> Vec<Profile> {
        fn rec(i: usize, left: u8, cur: &mut [u8; 10], out: &mut Vec<Profile>) {
            if i == 9 {
                cur[9] = left;
                out.push(Profile(*cur));
                return;
            }
            for c in 0..=left {
                cur[i] = c;
                rec(i + 1, left - c, cur, out);
            }
        }
        let mut out = Vec::new();
        rec(0, n as u8, &mut [0u8; 10], &mut out);
        out.sort();
        out
    }
}

/// The coefficients of `F(m)` as a map from monomial profile to value.
pub fn coefficient_column(m: &Profile) -> HashMap<Profile, Cyclotomic10<i64>> {
    let mut poly: HashMap<[u8; 10], Cyclotomic10<i64>> = HashMap::from([([0u8; 10], Cyclotomic10::one())]);
    for j in 0..10u8 {
        for _ in 0..m.0[j as usize] {
            let mut next: HashMap<[u8; 10], Cyclotomic10<i64>> = HashMap::with_capacity(poly.len() * 4);
            for (p, c) in &poly {
                for i in 0..10u8 {
                    let mut q = *p;
                    q[i as usize] += 1;
                    let term = c.mul_zeta_pow(-((i as i64) * (j as i64)));
                    let slot = next.entry(q).or_insert_with(Cyclotomic10::zero);
                    *slot = slot.clone() + term;
                }
            }
            poly = next;
        }
    }
    poly.into_iter().filter(|(_, c)| !c.is_zero()).map(|(p, c)| (Profile(p), c)).collect()
}

/// The assembled real LP.
#[derive(Debug, Clone)]
pub struct DelsarteLp {
    pub n: usize,
    pub d: u64,
    pub lambda: Lambda,
    /// Variables: orbits `{m, rev m}` of admissible profiles, the identity first.
    pub variables: Vec<Vec<Profile>>,
    /// Constraint rows, one per orbit `{p, rev p}` of monomial profiles.
    pub rows: Vec<Profile>,
    /// `matrix[r][v]`: aggregated coefficient of row `r` in variable `v`.
    pub matrix: Vec<Vec<Sqrt5>>,
}

impl DelsarteLp {
    pub fn assemble(n: usize, d: u64, lambda: Lambda, budget: &Budget) -> Result<DelsarteLp> {
        if n == 0 || n > MAX_LEN {
            return Err(invalid(format!("Delsarte LP length must be in 1..={MAX_LEN}, got {n}")));
        }
        let id = Profile::identity(n);
        let all = Profile::all(n);
        let mut variables: Vec<Vec<Profile>> = vec![vec![id]];
        for m in &all {
            if *m == id || !m.is_realizable() || m.cost(lambda) < d || m.canonical() != *m {
                continue;
            }
            let r = m.reverse();
            variables.push(if r == *m { vec![*m] } else { vec![*m, r] });
        }
        let rows: Vec<Profile> = all.iter().filter(|p| p.canonical() == **p).copied().collect();
        let row_index: HashMap<Profile, usize> = rows.iter().enumerate().map(|(i, p)| (*p, i)).collect();

        let columns: Vec<Result<Vec<Sqrt5>>> = variables
            .par_iter()
            .map(|orbit| {
                budget.check("Delsarte LP assembly")?;
                let mut col = vec![Cyclotomic10::<i64>::zero(); rows.len()];
                for m in orbit {
                    for (p, c) in coefficient_column(m) {
                        if let Some(&r) = row_index.get(&p) {
                            col[r] = col[r].clone() + c;
                        }
                    }
                }
                col.into_iter()
                    .map(|c| {
                        c.to_rational().to_real().ok_or_else(|| {
                            Error::Internal(format!("non-real aggregated coefficient {c} for orbit {orbit:?}"))
                        })
                    })
                    .collect()
            })
            .collect();
        let columns = columns.into_iter().collect::<Result<Vec<_>>>()?;
        let matrix = (0..rows.len()).map(|r| columns.iter().map(|col| col[r].clone()).collect()).collect();
        Ok(DelsarteLp { n, d, lambda, variables, rows, matrix })
    }

    /// Maximise the total distance distribution.
    pub fn to_problem(&self) -> LpProblem<Sqrt5> {
        let objective = self.variables.iter().map(|o| Sqrt5::from_integer(o.len() as i64)).collect();
        let mut p = LpProblem::new(Sense::Maximize, objective);
        let nv = self.variables.len();
        let mut unit = vec![Sqrt5::zero(); nv];
        unit[0] = Sqrt5::one();
        p.constraints.push(lp::Constraint { coeffs: unit, relation: Relation::Equal, rhs: Sqrt5::one() });
        for row in &self.matrix {
            p.constraints.push(lp::Constraint {
                coeffs: row.clone(),
                relation: Relation::GreaterEq,
                rhs: Sqrt5::zero(),
            });
        }
        p
    }
}

pub fn delsarte_bound(n: usize, d: u64, lambda: Lambda) -> Result<BoundReport> {
    delsarte_bound_within(n, d, lambda, &Budget::unlimited())
}

pub fn delsarte_bound_within(n: usize, d: u64, lambda: Lambda, budget: &Budget) -> Result<BoundReport> {
    let lp = DelsarteLp::assemble(n, d, lambda, budget)?;
    let problem = lp.to_problem();
    let value = match lp::solve_within(&problem, budget)? {
        LpOutcome::Optimal { value, .. } => BoundValue::Finite(ExactValue::from(value)),
        LpOutcome::Unbounded => BoundValue::Unbounded,
        LpOutcome::Infeasible => {
            return Err(Error::Internal("Delsarte LP infeasible; the identity alone is feasible".into()))
        }
    };
    Ok(BoundReport { method: Method::Delsarte, n, d, lambda, value, weights: None })
}
