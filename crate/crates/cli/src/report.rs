//! Convergence reports and their TSV / JSON renderings.

use std::fmt::Write as _;

use rayon::prelude::*;
use seqtrans::{GuardPolicy, PathSpec, SequenceSample, TransformTable};
use serde::Serialize;

use crate::config::{path_label, RunConfig};
use crate::registry::TransformSpec;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntryRow {
    pub k: usize,
    pub n: usize,
    pub value: Option<f64>,
    pub abs_error: Option<f64>,
    pub valid: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub k: usize,
    pub n: usize,
    pub best_value: f64,
    pub best_error: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TransformReport {
    pub transform: String,
    pub error: Option<String>,
    pub entries: Vec<EntryRow>,
    pub summary: Option<Summary>,
}

impl TransformReport {
    pub fn failed(&self) -> bool {
        self.summary.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub problem: String,
    pub limit: Option<f64>,
    pub path: String,
    pub start_offset: usize,
    pub transforms: Vec<TransformReport>,
}

/// Rounds to `digits` significant decimal digits.
pub fn round_to(v: f64, digits: usize) -> f64 {
    format!("{:.*e}", digits - 1, v).parse().unwrap_or(v)
}

/// Index-constant paths below the first transformed index of a table
/// (Levin u/t/v start at n = 1) are moved up to that index.
pub fn effective_path(table: &TransformTable<f64>, path: PathSpec) -> PathSpec {
    match path {
        PathSpec::IndexConstant(n) => PathSpec::IndexConstant(n.max(table.first_transformed_index())),
        p => p,
    }
}

pub(crate) fn evaluate_one(
    spec: &TransformSpec,
    sample: &SequenceSample<f64>,
    path: PathSpec,
    digits: usize,
    guard: &GuardPolicy,
) -> TransformReport {
    let limit = sample.limit();
    let failed = |label: String, e: String| TransformReport {
        transform: label,
        error: Some(e),
        entries: Vec::new(),
        summary: None,
    };
    let ev = match spec.evaluate(sample, guard) {
        Ok(ev) => ev,
        Err(e) => return failed(spec.to_string(), e.to_string()),
    };
    let label = TransformSpec {
        name: spec.name.clone(),
        params: ev.params.clone(),
    }
    .to_string();
    let cells = match ev.table.path_cells(effective_path(&ev.table, path)) {
        Ok(c) => c,
        Err(e) => return failed(label, e.to_string()),
    };
    let entries: Vec<EntryRow> = cells
        .iter()
        .map(|c| EntryRow {
            k: c.k,
            n: c.n,
            value: c.value.map(|v| round_to(v, digits)),
            abs_error: match (c.value, limit) {
                (Some(v), Some(s)) => Some(round_to((v - s).abs(), digits)),
                _ => None,
            },
            valid: c.value.is_some(),
        })
        .collect();
    // the order-zero column is the input itself
    let mut valid = entries.iter().filter(|e| e.valid && e.k > 0);
    let best = if limit.is_some() {
        valid.min_by(|a, b| a.abs_error.unwrap().total_cmp(&b.abs_error.unwrap()))
    } else {
        valid.next_back()
    };
    let summary = best.map(|e| Summary {
        k: e.k,
        n: e.n,
        best_value: e.value.unwrap(),
        best_error: e.abs_error,
    });
    let error = summary
        .is_none()
        .then(|| "no valid transformed entry on the path".to_string());
    TransformReport {
        transform: label,
        error,
        entries,
        summary,
    }
}

/// Runs every transform of `config` on `sample`. Transforms are evaluated
/// in parallel; the report keeps configuration order.
pub fn build_report(config: &RunConfig, sample: &SequenceSample<f64>) -> ConvergenceReport {
    let guard = GuardPolicy::default();
    let transforms = config
        .transforms
        .par_iter()
        .map(|t| evaluate_one(t, sample, config.path, config.digits, &guard))
        .collect();
    ConvergenceReport {
        problem: config.problem_label(),
        limit: sample.limit().map(|l| round_to(l, config.digits)),
        path: path_label(config.path),
        start_offset: config.start_offset,
        transforms,
    }
}

pub fn fmt_num(v: f64) -> String {
    format!("{v:e}")
}

fn opt(v: Option<f64>) -> String {
    v.map_or_else(|| "NA".to_string(), fmt_num)
}

pub const TSV_HEADER: &str = "transform\tk\tn\tvalue\tabs_error\tvalid";

impl ConvergenceReport {
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# problem\t{}", self.problem);
        let _ = writeln!(out, "# limit\t{}", opt(self.limit));
        let _ = writeln!(out, "# path\t{}", self.path);
        let _ = writeln!(out, "# start_offset\t{}", self.start_offset);
        out.push_str(TSV_HEADER);
        out.push('\n');
        for t in &self.transforms {
            for e in &t.entries {
                let (value, err) = match e.value {
                    Some(v) => (fmt_num(v), opt(e.abs_error)),
                    None => ("invalid".into(), "invalid".into()),
                };
                let _ = writeln!(out, "{}\t{}\t{}\t{value}\t{err}\t{}", t.transform, e.k, e.n, e.valid);
            }
        }
        for t in &self.transforms {
            match &t.summary {
                Some(s) => {
                    let _ = writeln!(
                        out,
                        "# best\t{}\tk={}\tn={}\tvalue={}\tabs_error={}",
                        t.transform,
                        s.k,
                        s.n,
                        fmt_num(s.best_value),
                        opt(s.best_error)
                    );
                }
                None => {
                    let _ = writeln!(out, "# failed\t{}\t{}", t.transform, t.error.as_deref().unwrap_or(""));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn all_failed(&self) -> bool {
        self.transforms.iter().all(TransformReport::failed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(round_to(1.234_56, 3), 1.23);
        assert_eq!(round_to(1.0 / 3.0, 17), 1.0 / 3.0);
        assert_eq!(fmt_num(0.25), "2.5e-1");
    }
}
