//! Browser bindings for a few seqtrans operations. Every export takes plain
//! strings and numbers and returns a JSON document; failures come back as
//! `{"error": "..."}` so the page only has to parse one shape.

use seqtrans::classic::{brezinski_theta, iterated_aitken, wynn_epsilon};
use seqtrans::interpolatory::{estimate_decay, median_tail, rho_standard, richardson_standard};
use seqtrans::levin::{levin_variant, weniger_variant, RemainderEstimateKind};
use seqtrans::pade::staircase_sequence;
use seqtrans::reference::{generate_problem, ProblemFamily, ProblemSpec};
use seqtrans::{GuardPolicy, PathSpec, SequenceSample, TransformTable};
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

/// Transforms offered by the demo.
pub const TRANSFORMS: &[&str] = &[
    "aitken",
    "epsilon",
    "theta",
    "levin_u",
    "levin_t",
    "weniger_delta",
    "rho",
    "richardson",
];

const MAX_LENGTH: usize = 200;

fn problem(text: &str, length: usize) -> Result<(ProblemSpec, SequenceSample<f64>), String> {
    if length == 0 || length > MAX_LENGTH {
        return Err(format!("length must be in 1..={MAX_LENGTH}"));
    }
    let family: ProblemFamily = text.trim().parse().map_err(|e| format!("{e}"))?;
    let spec = ProblemSpec::new(family, length);
    let sample = generate_problem(&spec).map_err(|e| e.to_string())?;
    Ok((spec, sample))
}

fn table(name: &str, s: &SequenceSample<f64>, guard: &GuardPolicy) -> Result<TransformTable<f64>, String> {
    let t = match name {
        "aitken" => iterated_aitken(s, guard),
        "epsilon" => wynn_epsilon(s, guard).map(|t| t.approximants()),
        "theta" => brezinski_theta(s, guard).map(|t| t.approximants()),
        "levin_u" => levin_variant(s, &RemainderEstimateKind::U, 1.0, guard),
        "levin_t" => levin_variant(s, &RemainderEstimateKind::T, 1.0, guard),
        "weniger_delta" => weniger_variant(s, &RemainderEstimateKind::D, 1.0, guard),
        "rho" => rho_standard(s, guard).map(|t| t.approximants()),
        "richardson" => richardson_standard(s, 1.0, guard),
        other => return Err(format!("unknown transform '{other}'")),
    };
    t.map_err(|e| e.to_string())
}

fn num(v: Option<f64>) -> Value {
    v.filter(|x| x.is_finite()).map_or(Value::Null, Value::from)
}

fn error_of(v: Option<f64>, limit: Option<f64>) -> Value {
    num(v.zip(limit).map(|(v, l)| (v - l).abs()))
}

/// Staircase path of each transform, indexed by data budget `m` (the last
/// partial sum used).
pub fn accelerate_value(problem_text: &str, length: usize, transforms: &str) -> Result<Value, String> {
    let (spec, sample) = problem(problem_text, length)?;
    let limit = sample.limit();
    let guard = GuardPolicy::default();
    let raw: Vec<Value> = sample
        .values()
        .iter()
        .enumerate()
        .map(|(m, &v)| json!({"m": m, "value": num(Some(v)), "abs_error": error_of(Some(v), limit)}))
        .collect();
    let mut series = Vec::new();
    for name in transforms.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let entry = match table(name, &sample, &guard) {
            Ok(t) => {
                let cells = t.path_cells(PathSpec::Staircase).map_err(|e| e.to_string())?;
                let points: Vec<Value> = cells
                    .iter()
                    .filter(|c| c.k > 0)
                    .map(|c| {
                        json!({
                            "m": t.last_index(c.k, c.n),
                            "k": c.k,
                            "n": c.n,
                            "value": num(c.value),
                            "abs_error": error_of(c.value, limit),
                        })
                    })
                    .collect();
                json!({"transform": name, "points": points})
            }
            Err(e) => json!({"transform": name, "error": e}),
        };
        series.push(entry);
    }
    Ok(json!({
        "problem": spec.family.to_string(),
        "limit": num(limit),
        "raw": raw,
        "series": series,
    }))
}

/// Padé staircase `[0/0], [1/0], [1/1], ...` for power-series problems.
pub fn pade_value(problem_text: &str, length: usize) -> Result<Value, String> {
    let (spec, sample) = problem(problem_text, length)?;
    let series = spec
        .power_series()
        .ok_or_else(|| format!("'{}' has no power-series form", spec.family))?
        .map_err(|e| e.to_string())?;
    let limit = sample.limit();
    let rows: Vec<Value> = staircase_sequence(&series, &GuardPolicy::default())
        .iter()
        .map(|e| json!({"l": e.l, "m": e.m, "value": num(e.value), "abs_error": error_of(e.value, limit)}))
        .collect();
    Ok(json!({"problem": spec.family.to_string(), "limit": num(limit), "rows": rows}))
}

/// Decay-exponent estimates `T_n` for a list of sequence values separated
/// by commas, whitespace or newlines.
pub fn estimate_alpha_value(values: &str) -> Result<Value, String> {
    let v = values
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<f64>().map_err(|_| format!("not a number: '{s}'")))
        .collect::<Result<Vec<_>, _>>()?;
    let sample = SequenceSample::from_values(v).map_err(|e| e.to_string())?;
    let t = estimate_decay(&sample, &GuardPolicy::default()).map_err(|e| e.to_string())?;
    let estimates: Vec<Value> = t.iter().map(|x| num(*x)).collect();
    Ok(json!({"estimates": estimates, "median_tail": num(median_tail(&t))}))
}

fn render(r: Result<Value, String>) -> String {
    r.unwrap_or_else(|e| json!({"error": e})).to_string()
}

#[wasm_bindgen]
pub fn accelerate(problem: &str, length: usize, transforms: &str) -> String {
    render(accelerate_value(problem, length, transforms))
}

#[wasm_bindgen]
pub fn pade(problem: &str, length: usize) -> String {
    render(pade_value(problem, length))
}

#[wasm_bindgen]
pub fn estimate_alpha(values: &str) -> String {
    render(estimate_alpha_value(values))
}

#[wasm_bindgen]
pub fn transforms() -> String {
    json!(TRANSFORMS).to_string()
}
