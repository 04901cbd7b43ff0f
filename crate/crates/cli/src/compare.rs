//! Cross-transform error table at matching data budgets.

use std::fmt::Write as _;

use seqtrans::{GuardPolicy, TransformTable};
use serde::Serialize;

use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::report::{effective_path, fmt_num, round_to};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompareRow {
    /// Last input index consumed.
    pub m: usize,
    /// Absolute error per column; `None` where the path has no valid entry
    /// ending at `m`.
    pub errors: Vec<Option<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompareTable {
    pub problem: String,
    pub limit: f64,
    pub columns: Vec<String>,
    pub failures: Vec<Option<String>>,
    pub rows: Vec<CompareRow>,
}

/// Merges the transforms of all configurations, which must describe the
/// same problem and preprocessing.
pub fn compare(configs: &[RunConfig]) -> CliResult<CompareTable> {
    let first = configs
        .first()
        .ok_or_else(|| CliError::Compare("no configurations".into()))?;
    for c in &configs[1..] {
        if c.problem_label() != first.problem_label() || c.start_offset != first.start_offset || c.limit != first.limit
        {
            return Err(CliError::Compare(format!(
                "'{}' (offset {}) differs from '{}' (offset {})",
                c.problem_label(),
                c.start_offset,
                first.problem_label(),
                first.start_offset
            )));
        }
    }
    let sample = first.load()?;
    let limit = sample
        .limit()
        .ok_or_else(|| CliError::Compare("the problem has no known limit".into()))?;
    let guard = GuardPolicy::default();
    let budgets = sample.len();
    let mut columns = Vec::new();
    let mut failures = Vec::new();
    let mut per_column: Vec<Vec<Option<f64>>> = Vec::new();
    for c in configs {
        for t in &c.transforms {
            let mut col = vec![None; budgets];
            let (label, failure) = match t.evaluate(&sample, &guard) {
                Ok(ev) => {
                    let label = crate::registry::TransformSpec {
                        name: t.name.clone(),
                        params: ev.params,
                    }
                    .to_string();
                    match fill(&ev.table, c, &mut col, limit) {
                        Ok(()) => (label, None),
                        Err(e) => (label, Some(e.to_string())),
                    }
                }
                Err(e) => (t.to_string(), Some(e.to_string())),
            };
            columns.push(label);
            failures.push(failure);
            per_column.push(col.into_iter().map(|e| e.map(|x| round_to(x, c.digits))).collect());
        }
    }
    let rows = (0..budgets)
        .map(|m| CompareRow {
            m,
            errors: per_column.iter().map(|c| c[m]).collect(),
        })
        .collect();
    Ok(CompareTable {
        problem: first.problem_label(),
        limit: round_to(limit, first.digits),
        columns,
        failures,
        rows,
    })
}

fn fill(table: &TransformTable<f64>, c: &RunConfig, col: &mut [Option<f64>], limit: f64) -> seqtrans::Result<()> {
    for cell in table.path_cells(effective_path(table, c.path))? {
        let m = table.last_index(cell.k, cell.n);
        if let (Some(v), Some(slot)) = (cell.value, col.get_mut(m)) {
            slot.get_or_insert((v - limit).abs());
        }
    }
    Ok(())
}

impl CompareTable {
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# problem\t{}", self.problem);
        let _ = writeln!(out, "# limit\t{}", fmt_num(self.limit));
        let _ = writeln!(out, "m\t{}", self.columns.join("\t"));
        for r in &self.rows {
            let cells: Vec<String> = r
                .errors
                .iter()
                .map(|e| e.map_or_else(|| "NA".into(), fmt_num))
                .collect();
            let _ = writeln!(out, "{}\t{}", r.m, cells.join("\t"));
        }
        for (c, f) in self.columns.iter().zip(&self.failures) {
            if let Some(f) = f {
                let _ = writeln!(out, "# failed\t{c}\t{f}");
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("table serializes");
        s.push('\n');
        s
    }
}
