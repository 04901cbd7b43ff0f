//! Reading sequences from CSV (one scalar per line) or JSON.

use std::io::Read;
use std::path::Path;

use seqtrans::{make_partial_sums, Error, SequenceSample};
use serde::Deserialize;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Csv,
    Json,
}

impl InputFormat {
    pub fn parse(s: &str) -> CliResult<Self> {
        match s {
            "csv" => Ok(InputFormat::Csv),
            "json" => Ok(InputFormat::Json),
            _ => Err(CliError::config(format!("unknown input format '{s}'"))),
        }
    }

    /// Guess from the file extension; stdin and unknown extensions are CSV.
    pub fn infer(path: &str) -> Self {
        match Path::new(path).extension().and_then(|e| e.to_str()) {
            Some("json") => InputFormat::Json,
            _ => InputFormat::Csv,
        }
    }
}

/// How CSV records are read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CsvMode {
    /// Series terms; partial sums are formed.
    #[default]
    Terms,
    /// Partial sums given directly.
    Values,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonInput {
    terms: Option<Vec<f64>>,
    values: Option<Vec<f64>>,
    limit: Option<f64>,
    // written by `gen`, ignored on input
    #[allow(dead_code)]
    problem: Option<String>,
    #[allow(dead_code)]
    length: Option<usize>,
}

fn consistency(e: Error) -> CliError {
    match e {
        Error::InconsistentPartialSums(n) => CliError::Consistency(format!("partial sum {n} does not match the terms")),
        Error::EmptyInput => CliError::Ingest {
            line: 1,
            message: "no values".into(),
        },
        other => CliError::Consistency(other.to_string()),
    }
}

pub fn parse_csv(text: &str, mode: CsvMode) -> CliResult<SequenceSample<f64>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut out = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| CliError::Ingest {
            line: e.position().map_or(0, |p| p.line() as usize),
            message: e.to_string(),
        })?;
        let line = rec.position().map_or(0, |p| p.line() as usize);
        let fields: Vec<&str> = rec.iter().filter(|f| !f.is_empty()).collect();
        match fields.as_slice() {
            [] => continue,
            [v] => {
                let x: f64 = v.parse().map_err(|_| CliError::Ingest {
                    line,
                    message: format!("'{v}' is not a number"),
                })?;
                if !x.is_finite() {
                    return Err(CliError::Ingest {
                        line,
                        message: format!("'{v}' is not finite"),
                    });
                }
                out.push(x);
            }
            _ => {
                return Err(CliError::Ingest {
                    line,
                    message: format!("expected one value, found {}", fields.len()),
                })
            }
        }
    }
    if out.is_empty() {
        return Err(CliError::Ingest {
            line: 1,
            message: "no values".into(),
        });
    }
    match mode {
        CsvMode::Terms => make_partial_sums(&out).map_err(consistency),
        CsvMode::Values => SequenceSample::from_values(out).map_err(consistency),
    }
}

pub fn parse_json(text: &str) -> CliResult<SequenceSample<f64>> {
    let input: JsonInput = serde_json::from_str(text).map_err(|e| CliError::Ingest {
        line: e.line(),
        message: e.to_string(),
    })?;
    let finite = |v: &[f64], what: &str| match v.iter().position(|x| !x.is_finite()) {
        Some(i) => Err(CliError::Ingest {
            line: 1,
            message: format!("{what}[{i}] is not finite"),
        }),
        None => Ok(()),
    };
    let sample = match (input.terms, input.values) {
        (Some(t), Some(v)) => {
            finite(&t, "terms")?;
            finite(&v, "values")?;
            SequenceSample::from_values_and_terms(v, t).map_err(consistency)?
        }
        (Some(t), None) => {
            finite(&t, "terms")?;
            make_partial_sums(&t).map_err(consistency)?
        }
        (None, Some(v)) => {
            finite(&v, "values")?;
            SequenceSample::from_values(v).map_err(consistency)?
        }
        (None, None) => {
            return Err(CliError::Ingest {
                line: 1,
                message: "expected \"terms\" or \"values\"".into(),
            })
        }
    };
    Ok(match input.limit {
        Some(l) => sample.with_limit(l),
        None => sample,
    })
}

/// Reads `path` (`-` for stdin) in the given format.
pub fn ingest(path: &str, format: InputFormat, mode: CsvMode) -> CliResult<SequenceSample<f64>> {
    let io = |source| CliError::Io {
        path: path.to_string(),
        source,
    };
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        s
    } else {
        std::fs::read_to_string(path).map_err(io)?
    };
    match format {
        InputFormat::Csv => parse_csv(&text, mode),
        InputFormat::Json => parse_json(&text),
    }
}
