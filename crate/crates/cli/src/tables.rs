//! Reproduction of the five reference tables, cell by cell, against the embedded values.

use aldkit_core::ald::Lambda;
use aldkit_core::budget::Budget;
use aldkit_core::delsarte::{self, MAX_LEN as DELSARTE_MAX_LEN};
use aldkit_core::hyperbound;
use aldkit_core::report::{BoundReport, BoundValue};
use aldkit_core::search::table5_lower_bound;
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::expected;

pub const CSV_HEADER: &str = "n,d,lambda,method,value_floor,value_num,value_den,expected,match";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CellValue {
    Bound(BoundValue),
    Count(BigUint),
    BudgetExceeded,
    Failed(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MatchStatus {
    Match,
    Mismatch,
    /// The reference table has no value for this cell.
    Unlisted,
    Budget,
    Error,
}

impl MatchStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            MatchStatus::Match => "match",
            MatchStatus::Mismatch => "mismatch",
            MatchStatus::Unlisted => "unlisted",
            MatchStatus::Budget => "budget",
            MatchStatus::Error => "error",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableCell {
    pub table: u8,
    pub n: usize,
    pub d: u64,
    pub lambda: u32,
    pub method: String,
    pub value: CellValue,
    pub expected: Option<String>,
    pub source: Option<String>,
}

impl TableCell {
    /// Floor as printed: an integer, `UNBOUNDED`, `BUDGET` or `ERROR`.
    pub fn value_floor(&self) -> String {
        match &self.value {
            CellValue::Bound(BoundValue::Finite(v)) => v.floor().to_string(),
            CellValue::Bound(BoundValue::Unbounded) => "UNBOUNDED".into(),
            CellValue::Count(c) => c.to_string(),
            CellValue::BudgetExceeded => "BUDGET".into(),
            CellValue::Failed(_) => "ERROR".into(),
        }
    }

    /// Exact value as numerator and denominator; empty when there is none.
    pub fn value_num_den(&self) -> (String, String) {
        match &self.value {
            CellValue::Bound(BoundValue::Finite(v)) => v.num_den(),
            CellValue::Count(c) => (c.to_string(), "1".into()),
            _ => (String::new(), String::new()),
        }
    }

    pub fn status(&self) -> MatchStatus {
        match (&self.value, &self.expected) {
            (CellValue::BudgetExceeded, _) => MatchStatus::Budget,
            (CellValue::Failed(_), _) => MatchStatus::Error,
            (_, None) => MatchStatus::Unlisted,
            (_, Some(e)) if *e == self.value_floor() => MatchStatus::Match,
            _ => MatchStatus::Mismatch,
        }
    }

    pub fn csv_row(&self) -> String {
        let (num, den) = self.value_num_den();
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.n,
            self.d,
            self.lambda,
            self.method,
            self.value_floor(),
            num,
            den,
            self.expected.as_deref().unwrap_or(""),
            self.status().as_str()
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        let (num, den) = self.value_num_den();
        let mut v = serde_json::json!({
            "table": self.table,
            "n": self.n,
            "d": self.d,
            "lambda": self.lambda,
            "method": self.method,
            "value_floor": self.value_floor(),
            "value_num": num,
            "value_den": den,
            "expected": self.expected,
            "source": self.source,
            "match": self.status(),
        });
        if let CellValue::Failed(msg) = &self.value {
            v["error"] = msg.clone().into();
        }
        v
    }
}

/// Default largest `n` per table: the reference extent, or the desk-scale limit for the Delsarte table.
pub fn default_max_n(table: u8) -> usize {
    match table {
        2 => 15,
        3 => 3,
        4 => 5,
        _ => 10,
    }
}

/// A cell to compute: `(n, d, method)`.
fn grid(table: u8, max_n: usize) -> Vec<(usize, u64, &'static str)> {
    let mut cells = Vec::new();
    for n in 1..=max_n {
        let nd = n as u64;
        match table {
            1 => cells.extend([3, 5, 7, 9, 11, 13].map(|d| (n, d, "lp"))),
            2 if n >= 5 => cells.extend(["lp", "naive", "simple", "weights1"].map(|m| (n, 5, m))),
            3 => cells.extend((1..=4 * nd).map(|d| (n, d, "delsarte"))),
            4 => cells.extend((2 * nd + 1..=4 * nd).map(|d| (n, d, "lp"))),
            5 => {
                for d in [3, 5, 7] {
                    cells.push((n, d, "lower"));
                    cells.push((n, d, "lp"));
                }
            }
            _ => {}
        }
    }
    cells
}

fn bound(method: &str, n: usize, d: u64, budget: &Budget) -> aldkit_core::Result<BoundReport> {
    let lambda = Lambda::ONE;
    match method {
        "lp" => hyperbound::lp_hypergraph_bound(n, d, lambda),
        "naive" => hyperbound::naive_weight_bound(n, d, lambda),
        "simple" => hyperbound::simple_bound(n, d, lambda),
        "weights1" => hyperbound::weights1_bound(n, hyperbound::radius_for(d)?),
        "delsarte" => delsarte::delsarte_bound_within(n, d, lambda, budget),
        other => unreachable!("no table method {other}"),
    }
}

fn compute_cell(table: u8, n: usize, d: u64, method: &str, budget: &Budget) -> TableCell {
    let value = if budget.expired() {
        CellValue::BudgetExceeded
    } else if method == "lower" {
        match table5_lower_bound(n, d) {
            Ok(v) => CellValue::Count(v),
            Err(e) => CellValue::Failed(e.to_string()),
        }
    } else {
        match bound(method, n, d, budget) {
            Ok(r) => CellValue::Bound(r.value),
            Err(aldkit_core::Error::BudgetExceeded(_)) => CellValue::BudgetExceeded,
            Err(e) => CellValue::Failed(e.to_string()),
        }
    };
    let exp = expected::lookup(table, n, d, 1, method);
    TableCell {
        table,
        n,
        d,
        lambda: 1,
        method: method.to_string(),
        value,
        expected: exp.as_ref().map(|e| e.expected.clone()),
        source: exp.map(|e| e.source),
    }
}

/// Computes every cell of `table` up to length `max_n`, in parallel, in a fixed order.
pub fn compute_table(table: u8, max_n: usize, budget: &Budget) -> CliResult<Vec<TableCell>> {
    if !(1..=5).contains(&table) {
        return Err(CliError::Usage(format!("no table {table}; tables are 1 to 5")));
    }
    if max_n == 0 {
        return Err(CliError::Usage("--max-n must be at least 1".into()));
    }
    if table == 3 && max_n > DELSARTE_MAX_LEN {
        return Err(CliError::Usage(format!("table 3 supports --max-n up to {DELSARTE_MAX_LEN}")));
    }
    Ok(grid(table, max_n).into_par_iter().map(|(n, d, m)| compute_cell(table, n, d, m, budget)).collect())
}

pub fn render_csv(cells: &[TableCell]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for c in cells {
        out.push_str(&c.csv_row());
        out.push('\n');
    }
    out
}

pub fn render_json(cells: &[TableCell]) -> String {
    let v: Vec<serde_json::Value> = cells.iter().map(TableCell::to_json).collect();
    let mut s = serde_json::to_string_pretty(&v).expect("table serialises");
    s.push('\n');
    s
}
