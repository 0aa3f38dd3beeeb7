//! Dense two-phase simplex.
//!
//! Entering columns follow Dantzig's rule, with Bland's rule taking over during
//! long degenerate runs. Ties in the ratio test go to the lowest basic index.
//!
//! A floating-point pass over the same standard form first proposes a final
//! basis. The exact tableau is pivoted onto that basis when doing so keeps it
//! primal feasible, and the exact method then runs to completion from there.
//! Floating point only chooses pivots; every reported value is exact.

use crate::budget::Budget;
use crate::error::{Error, Result};

use super::{LpOutcome, LpProblem, Relation, Scalar, Sense};

/// Consecutive degenerate pivots tolerated before switching to Bland's rule.
///
/// Cycling needs an endless run of degenerate pivots, and Bland's rule cannot
/// cycle, so every degenerate run ends and the method terminates.
const DEGENERATE_LIMIT: usize = 8;

/// Structural column origin: `x_j = shift + col` or `x_j = plus - minus`.
#[derive(Debug, Clone)]
enum VarMap<T> {
    Shifted { col: usize, shift: T },
    Free { plus: usize, minus: usize },
}

/// Equality form `[A | slack | artificial] x = b`, `x >= 0`, `b >= 0`.
struct Standard<T> {
    rows: Vec<Vec<T>>,
    basis: Vec<usize>,
    art_start: usize,
    width: usize,
    maps: Vec<VarMap<T>>,
    /// Phase two costs (minimisation) over the non-artificial columns.
    cost: Vec<T>,
}

#[derive(Clone)]
struct Tableau<T> {
    /// Each row holds the column entries followed by the right-hand side.
    rows: Vec<Vec<T>>,
    /// Reduced costs followed by minus the current objective value.
    cost: Vec<T>,
    basis: Vec<usize>,
    /// Columns at or beyond this index may never enter the basis.
    enter_limit: usize,
}

enum Step {
    Optimal,
    Unbounded,
}

impl<T: Scalar> Tableau<T> {
    fn width(&self) -> usize {
        self.cost.len() - 1
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        if !p.is_one() {
            for v in self.rows[r].iter_mut() {
                if !v.is_zero() {
                    *v /= &p;
                }
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let nz: Vec<usize> = (0..pivot_row.len()).filter(|&j| !pivot_row[j].is_zero()).collect();
        let eliminate = |row: &mut Vec<T>| {
            let f = row[c].clone();
            if f.is_zero() {
                return;
            }
            for &j in &nz {
                let mut t = pivot_row[j].clone();
                t *= &f;
                row[j] -= &t;
            }
        };
        for row in self.rows.iter_mut() {
            if !row.is_empty() {
                eliminate(row);
            }
        }
        eliminate(&mut self.cost);
        self.rows[r] = pivot_row;
        self.basis[r] = c;
    }

    fn run(&mut self, budget: &Budget) -> Result<Step> {
        let rhs = self.width();
        let mut degenerate_streak = 0usize;
        loop {
            budget.check("simplex iterations")?;
            let enter = if degenerate_streak < DEGENERATE_LIMIT {
                let mut best: Option<usize> = None;
                for j in 0..self.enter_limit {
                    if self.cost[j] < T::zero() && best.is_none_or(|b| self.cost[j] < self.cost[b]) {
                        best = Some(j);
                    }
                }
                best
            } else {
                (0..self.enter_limit).find(|&j| self.cost[j] < T::zero())
            };
            let Some(enter) = enter else {
                return Ok(Step::Optimal);
            };
            let mut best: Option<(usize, T)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[enter] <= T::zero() {
                    continue;
                }
                let mut ratio = row[rhs].clone();
                ratio /= &row[enter];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((r, ratio)) = best else {
                return Ok(Step::Unbounded);
            };
            if ratio.is_zero() {
                degenerate_streak += 1;
            } else {
                degenerate_streak = 0;
            }
            self.pivot(r, enter);
        }
    }

    /// Recomputes reduced costs for `c` (indexed by column) against the current basis.
    fn price(&mut self, c: &[T]) {
        let w = self.width();
        let mut cost: Vec<T> = (0..=w).map(|j| if j < c.len() { c[j].clone() } else { T::zero() }).collect();
        for (i, row) in self.rows.iter().enumerate() {
            let cb = match c.get(self.basis[i]) {
                Some(v) if !v.is_zero() => v.clone(),
                _ => continue,
            };
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    let mut t = v.clone();
                    t *= &cb;
                    cost[j] -= &t;
                }
            }
        }
        self.cost = cost;
    }

    /// Pivots each target column into the basis where an exact nonzero pivot exists.
    fn install(&mut self, target: &[usize], budget: &Budget) -> Result<()> {
        let mut wanted = vec![false; self.width()];
        for &j in target {
            wanted[j] = true;
        }
        for &j in target {
            if self.basis.contains(&j) {
                continue;
            }
            budget.check("simplex warm start")?;
            let row = (0..self.rows.len())
                .filter(|&r| !wanted[self.basis[r]] && !self.rows[r][j].is_zero())
                .max_by(|&a, &b| self.rows[a][j].to_f64().abs().total_cmp(&self.rows[b][j].to_f64().abs()));
            if let Some(r) = row {
                self.pivot(r, j);
            }
        }
        Ok(())
    }

    fn is_primal_feasible(&self) -> bool {
        let rhs = self.width();
        self.rows.iter().all(|r| r[rhs] >= T::zero())
    }
}

fn standardize<T: Scalar>(problem: &LpProblem<T>) -> Result<Standard<T>> {
    let nv = problem.num_vars();
    if problem.lower_bounds.len() != nv {
        return Err(Error::LengthMismatch { left: problem.lower_bounds.len(), right: nv });
    }
    for c in &problem.constraints {
        if c.coeffs.len() != nv {
            return Err(Error::LengthMismatch { left: c.coeffs.len(), right: nv });
        }
    }

    let mut maps = Vec::with_capacity(nv);
    let mut ns = 0usize;
    for lb in &problem.lower_bounds {
        match lb {
            Some(shift) => {
                maps.push(VarMap::Shifted { col: ns, shift: shift.clone() });
                ns += 1;
            }
            None => {
                maps.push(VarMap::Free { plus: ns, minus: ns + 1 });
                ns += 2;
            }
        }
    }

    let m = problem.constraints.len();
    let mut rows: Vec<(Vec<T>, Relation, T)> = Vec::with_capacity(m);
    for con in &problem.constraints {
        let mut coeffs = vec![T::zero(); ns];
        let mut rhs = con.rhs.clone();
        for (j, a) in con.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            match &maps[j] {
                VarMap::Shifted { col, shift } => {
                    coeffs[*col] = a.clone();
                    if !shift.is_zero() {
                        let mut t = a.clone();
                        t *= shift;
                        rhs -= &t;
                    }
                }
                VarMap::Free { plus, minus } => {
                    coeffs[*plus] = a.clone();
                    coeffs[*minus] = -a.clone();
                }
            }
        }
        let mut rel = con.relation;
        // Negating `a.x >= 0` gives a row whose slack is an initial basic variable.
        let flip_homogeneous = rel == Relation::GreaterEq && rhs.is_zero();
        if rhs < T::zero() || flip_homogeneous {
            for v in coeffs.iter_mut() {
                *v = -std::mem::replace(v, T::zero());
            }
            rhs = -rhs;
            rel = match rel {
                Relation::LessEq => Relation::GreaterEq,
                Relation::GreaterEq => Relation::LessEq,
                Relation::Equal => Relation::Equal,
            };
        }
        rows.push((coeffs, rel, rhs));
    }

    let n_slack = rows.iter().filter(|r| r.1 != Relation::Equal).count();
    let n_art = rows.iter().filter(|r| r.1 != Relation::LessEq).count();
    let art_start = ns + n_slack;
    let width = art_start + n_art;

    let mut out_rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let (mut next_slack, mut next_art) = (ns, art_start);
    for (coeffs, rel, rhs) in rows {
        let mut row = coeffs;
        row.resize(width + 1, T::zero());
        row[width] = rhs;
        match rel {
            Relation::LessEq => {
                row[next_slack] = T::one();
                basis.push(next_slack);
                next_slack += 1;
            }
            Relation::GreaterEq => {
                row[next_slack] = -T::one();
                next_slack += 1;
                row[next_art] = T::one();
                basis.push(next_art);
                next_art += 1;
            }
            Relation::Equal => {
                row[next_art] = T::one();
                basis.push(next_art);
                next_art += 1;
            }
        }
        out_rows.push(row);
    }

    let mut cost = vec![T::zero(); art_start];
    for (j, obj) in problem.objective.iter().enumerate() {
        let v = match problem.sense {
            Sense::Minimize => obj.clone(),
            Sense::Maximize => -obj.clone(),
        };
        match &maps[j] {
            VarMap::Shifted { col, .. } => cost[*col] = v,
            VarMap::Free { plus, minus } => {
                cost[*minus] = -v.clone();
                cost[*plus] = v;
            }
        }
    }

    Ok(Standard { rows: out_rows, basis, art_start, width, maps, cost })
}

pub(super) fn solve<T: Scalar>(problem: &LpProblem<T>, budget: &Budget) -> Result<LpOutcome<T>> {
    solve_guided(problem, budget, true)
}

pub(super) fn solve_guided<T: Scalar>(problem: &LpProblem<T>, budget: &Budget, guided: bool) -> Result<LpOutcome<T>> {
    let sf = standardize(problem)?;
    let (art_start, width) = (sf.art_start, sf.width);
    let mut tab = Tableau {
        rows: sf.rows.clone(),
        cost: vec![T::zero(); width + 1],
        basis: sf.basis.clone(),
        enter_limit: width,
    };

    if guided {
        if let Some(basis) = float_guide::final_basis(&sf, budget)? {
            if let Some(col_val) = certify(&sf, &basis, budget)? {
                return finish(problem, &sf, col_val);
            }
            let target: Vec<usize> = basis.into_iter().filter(|&b| b < art_start).collect();
            let mut warm = tab.clone();
            warm.install(&target, budget)?;
            if warm.is_primal_feasible() {
                tab = warm;
            }
        }
    }

    if art_start < width {
        let phase1: Vec<T> = (0..width).map(|j| if j >= art_start { T::one() } else { T::zero() }).collect();
        tab.price(&phase1);
        tab.enter_limit = width;
        match tab.run(budget)? {
            Step::Optimal => {}
            Step::Unbounded => return Err(Error::Internal("phase one objective is bounded below".into())),
        }
        if !tab.cost[width].is_zero() {
            return Ok(LpOutcome::Infeasible);
        }
        // Drive remaining artificials out of the basis; rows that cannot pivot are redundant.
        let mut i = 0;
        while i < tab.rows.len() {
            if tab.basis[i] >= art_start {
                budget.check("simplex iterations")?;
                match (0..art_start).find(|&j| !tab.rows[i][j].is_zero()) {
                    Some(j) => tab.pivot(i, j),
                    None => {
                        tab.rows.remove(i);
                        tab.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
        for row in tab.rows.iter_mut() {
            let rhs = row.pop().expect("row has a right-hand side");
            row.truncate(art_start);
            row.push(rhs);
        }
    }

    let width = art_start;
    tab.cost = vec![T::zero(); width + 1];
    tab.price(&sf.cost);
    tab.enter_limit = width;
    if let Step::Unbounded = tab.run(budget)? {
        return Ok(LpOutcome::Unbounded);
    }

    let mut col_val = vec![T::zero(); width];
    for (i, &b) in tab.basis.iter().enumerate() {
        col_val[b] = tab.rows[i][width].clone();
    }
    finish(problem, &sf, col_val)
}

/// Proves `basis` optimal by exhibiting a primal feasible point and a dual
/// feasible vector for it; returns the column values on success.
fn certify<T: Scalar>(sf: &Standard<T>, basis: &[usize], budget: &Budget) -> Result<Option<Vec<T>>> {
    let m = sf.rows.len();
    if basis.len() != m {
        return Ok(None);
    }
    budget.check("simplex certificate")?;
    let rhs = sf.width;
    let b_mat: Vec<Vec<T>> = sf.rows.iter().map(|row| basis.iter().map(|&j| row[j].clone()).collect()).collect();
    let b_vec: Vec<T> = sf.rows.iter().map(|row| row[rhs].clone()).collect();
    let Some(x_b) = super::linsolve::solve_dense(b_mat.clone(), b_vec) else {
        return Ok(None);
    };
    for (&j, v) in basis.iter().zip(&x_b) {
        if *v < T::zero() || (j >= sf.art_start && !v.is_zero()) {
            return Ok(None);
        }
    }
    budget.check("simplex certificate")?;
    let transposed: Vec<Vec<T>> = (0..m).map(|k| b_mat.iter().map(|row| row[k].clone()).collect()).collect();
    let c_b: Vec<T> = basis.iter().map(|&j| sf.cost.get(j).cloned().unwrap_or_else(T::zero)).collect();
    let Some(y) = super::linsolve::solve_dense(transposed, c_b) else {
        return Ok(None);
    };
    for j in 0..sf.art_start {
        let mut reduced = sf.cost[j].clone();
        for (row, yi) in sf.rows.iter().zip(&y) {
            if !row[j].is_zero() && !yi.is_zero() {
                let mut t = row[j].clone();
                t *= yi;
                reduced -= &t;
            }
        }
        if reduced < T::zero() {
            return Ok(None);
        }
    }
    let mut col_val = vec![T::zero(); sf.art_start];
    for (&j, v) in basis.iter().zip(x_b) {
        if j < sf.art_start {
            col_val[j] = v;
        }
    }
    Ok(Some(col_val))
}

fn finish<T: Scalar>(problem: &LpProblem<T>, sf: &Standard<T>, col_val: Vec<T>) -> Result<LpOutcome<T>> {
    let solution: Vec<T> = sf
        .maps
        .iter()
        .map(|mp| match mp {
            VarMap::Shifted { col, shift } => {
                let mut v = col_val[*col].clone();
                v += shift;
                v
            }
            VarMap::Free { plus, minus } => {
                let mut v = col_val[*plus].clone();
                v -= &col_val[*minus];
                v
            }
        })
        .collect();
    if !problem.is_feasible(&solution) {
        return Err(Error::Internal("simplex returned an infeasible point".into()));
    }
    let value = problem.objective_value(&solution);
    Ok(LpOutcome::Optimal { value, solution })
}

mod float_guide {
    use super::{Scalar, Standard, DEGENERATE_LIMIT};
    use crate::budget::Budget;
    use crate::error::Result;

    /// Pivot and feasibility tolerance for the guiding pass only.
    const EPS: f64 = 1e-9;

    /// Pivot cap per phase, as a multiple of rows plus columns.
    const PIVOT_FACTOR: usize = 50;

    struct FTab {
        rows: Vec<Vec<f64>>,
        cost: Vec<f64>,
        basis: Vec<usize>,
        enter_limit: usize,
    }

    enum Outcome {
        Done,
        GaveUp,
    }

    impl FTab {
        fn width(&self) -> usize {
            self.cost.len() - 1
        }

        fn pivot(&mut self, r: usize, c: usize) {
            let p = self.rows[r][c];
            for v in self.rows[r].iter_mut() {
                *v /= p;
            }
            let pivot_row = std::mem::take(&mut self.rows[r]);
            let elim = |row: &mut Vec<f64>| {
                let f = row[c];
                if f != 0.0 {
                    for (x, y) in row.iter_mut().zip(&pivot_row) {
                        *x -= f * y;
                    }
                    row[c] = 0.0;
                }
            };
            for row in self.rows.iter_mut() {
                if !row.is_empty() {
                    elim(row);
                }
            }
            elim(&mut self.cost);
            self.rows[r] = pivot_row;
            self.basis[r] = c;
        }

        fn price(&mut self, c: &[f64]) {
            let w = self.width();
            let mut cost: Vec<f64> = (0..=w).map(|j| c.get(j).copied().unwrap_or(0.0)).collect();
            for (i, row) in self.rows.iter().enumerate() {
                let cb = c.get(self.basis[i]).copied().unwrap_or(0.0);
                if cb != 0.0 {
                    for (x, v) in cost.iter_mut().zip(row) {
                        *x -= cb * v;
                    }
                }
            }
            self.cost = cost;
        }

        fn run(&mut self, budget: &Budget) -> Result<Outcome> {
            let rhs = self.width();
            let cap = PIVOT_FACTOR * (self.rows.len() + rhs);
            let mut streak = 0;
            for _ in 0..cap {
                budget.check("simplex warm start")?;
                let enter = if streak < DEGENERATE_LIMIT {
                    (0..self.enter_limit)
                        .filter(|&j| self.cost[j] < -EPS)
                        .min_by(|&a, &b| self.cost[a].total_cmp(&self.cost[b]))
                } else {
                    (0..self.enter_limit).find(|&j| self.cost[j] < -EPS)
                };
                let Some(c) = enter else {
                    return Ok(Outcome::Done);
                };
                let mut best: Option<(usize, f64)> = None;
                for (i, row) in self.rows.iter().enumerate() {
                    if row[c] <= EPS {
                        continue;
                    }
                    let ratio = row[rhs].max(0.0) / row[c];
                    let better = match best {
                        None => true,
                        Some((bi, br)) => ratio < br - EPS || (ratio <= br + EPS && self.basis[i] < self.basis[bi]),
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
                let Some((r, ratio)) = best else {
                    return Ok(Outcome::Done);
                };
                streak = if ratio <= EPS { streak + 1 } else { 0 };
                self.pivot(r, c);
            }
            Ok(Outcome::GaveUp)
        }
    }

    impl FTab {
        /// Dual simplex pivots from a dual feasible tableau until the right-hand side is nonnegative.
        fn run_dual(&mut self, budget: &Budget) -> Result<Outcome> {
            let rhs = self.width();
            let cap = PIVOT_FACTOR * (self.rows.len() + rhs);
            for _ in 0..cap {
                budget.check("simplex warm start")?;
                let leave = (0..self.rows.len())
                    .filter(|&i| self.rows[i][rhs] < -EPS)
                    .min_by(|&a, &b| self.rows[a][rhs].total_cmp(&self.rows[b][rhs]));
                let Some(r) = leave else {
                    return Ok(Outcome::Done);
                };
                let enter = (0..self.enter_limit).filter(|&j| self.rows[r][j] < -EPS).min_by(|&a, &b| {
                    let ra = self.cost[a].max(0.0) / -self.rows[r][a];
                    let rb = self.cost[b].max(0.0) / -self.rows[r][b];
                    ra.total_cmp(&rb)
                });
                let Some(c) = enter else {
                    return Ok(Outcome::GaveUp);
                };
                self.pivot(r, c);
            }
            Ok(Outcome::GaveUp)
        }

        fn primal_clean(&self) -> bool {
            let rhs = self.width();
            self.rows.iter().all(|row| row[rhs] >= -EPS)
        }
    }

    /// Rebuilds the tableau as `B⁻¹ [A | b]` from the original rows, discarding drift.
    fn refactor(tab: &mut FTab, original: &[Vec<f64>], cost: &[f64]) -> bool {
        let m = original.len();
        let w = tab.width() + 1;
        let mut aug: Vec<Vec<f64>> = original
            .iter()
            .map(|row| tab.basis.iter().map(|&j| row[j]).chain(row[..w].iter().copied()).collect())
            .collect();
        for k in 0..m {
            let p = (k..m).max_by(|&a, &b| aug[a][k].abs().total_cmp(&aug[b][k].abs())).expect("nonempty");
            if aug[p][k].abs() < EPS {
                return false;
            }
            aug.swap(k, p);
            let piv = aug[k][k];
            for v in aug[k].iter_mut() {
                *v /= piv;
            }
            let prow = aug[k].clone();
            for (i, row) in aug.iter_mut().enumerate() {
                let f = row[k];
                if i != k && f != 0.0 {
                    for (x, y) in row.iter_mut().zip(&prow) {
                        *x -= f * y;
                    }
                }
            }
        }
        tab.rows = aug.into_iter().map(|row| row[m..].to_vec()).collect();
        tab.price(cost);
        true
    }

    /// Refactorisation rounds before the guide gives up.
    const MAX_ROUNDS: usize = 6;

    fn solve_phase(tab: &mut FTab, original: &[Vec<f64>], cost: &[f64], budget: &Budget) -> Result<bool> {
        tab.price(cost);
        for _ in 0..MAX_ROUNDS {
            if let Outcome::GaveUp = tab.run(budget)? {
                return Ok(false);
            }
            if !refactor(tab, original, cost) {
                return Ok(false);
            }
            let dual_clean = (0..tab.enter_limit).all(|j| tab.cost[j] >= -EPS);
            if dual_clean && tab.primal_clean() {
                return Ok(true);
            }
            // Drift left the basis primal infeasible; repair it with dual pivots.
            if dual_clean && (matches!(tab.run_dual(budget)?, Outcome::GaveUp) || !refactor(tab, original, cost)) {
                return Ok(false);
            }
        }
        Ok(false)
    }

    /// Proposed final basis, one column per row, possibly with artificials at zero.
    pub(super) fn final_basis<T: Scalar>(sf: &Standard<T>, budget: &Budget) -> Result<Option<Vec<usize>>> {
        let conv = |v: &T| v.to_f64();
        let rows: Vec<Vec<f64>> = sf.rows.iter().map(|r| r.iter().map(conv).collect()).collect();
        if rows.iter().flatten().any(|v| !v.is_finite()) {
            return Ok(None);
        }
        let original = rows.clone();
        let mut tab = FTab { rows, cost: vec![0.0; sf.width + 1], basis: sf.basis.clone(), enter_limit: sf.width };
        if sf.art_start < sf.width {
            let phase1: Vec<f64> = (0..sf.width).map(|j| if j >= sf.art_start { 1.0 } else { 0.0 }).collect();
            if !solve_phase(&mut tab, &original, &phase1, budget)? {
                return Ok(None);
            }
        }
        let cost: Vec<f64> = sf.cost.iter().map(conv).collect();
        tab.enter_limit = sf.art_start;
        if !solve_phase(&mut tab, &original, &cost, budget)? {
            return Ok(None);
        }
        Ok(Some(tab.basis))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::{int, rational};
    use num_rational::BigRational;

    fn beale() -> LpProblem<BigRational> {
        let mut p = LpProblem::new(Sense::Minimize, vec![rational(-3, 4), int(150), rational(-1, 50), int(6)]);
        p.add_constraint(vec![rational(1, 4), int(-60), rational(-1, 25), int(9)], Relation::LessEq, int(0)).unwrap();
        p.add_constraint(vec![rational(1, 2), int(-90), rational(-1, 50), int(3)], Relation::LessEq, int(0)).unwrap();
        p.add_constraint(vec![int(0), int(0), int(1), int(0)], Relation::LessEq, int(1)).unwrap();
        p
    }

    #[test]
    fn cold_and_guided_agree() {
        let p = beale();
        let b = Budget::unlimited();
        let cold = solve_guided(&p, &b, false).unwrap();
        let warm = solve_guided(&p, &b, true).unwrap();
        assert_eq!(cold.value(), warm.value());
        assert_eq!(cold.value(), Some(&rational(-1, 20)));
    }

    #[test]
    fn cold_path_detects_infeasibility() {
        let mut p = LpProblem::new(Sense::Minimize, vec![int(1)]);
        p.add_constraint(vec![int(1)], Relation::Equal, int(3)).unwrap();
        p.add_constraint(vec![int(1)], Relation::LessEq, int(2)).unwrap();
        assert_eq!(solve_guided(&p, &Budget::unlimited(), false).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn redundant_equalities_are_dropped() {
        let mut p = LpProblem::new(Sense::Maximize, vec![int(1), int(1)]);
        p.add_constraint(vec![int(1), int(1)], Relation::Equal, int(2)).unwrap();
        p.add_constraint(vec![int(2), int(2)], Relation::Equal, int(4)).unwrap();
        for guided in [false, true] {
            assert_eq!(solve_guided(&p, &Budget::unlimited(), guided).unwrap().value(), Some(&int(2)));
        }
    }
}
