//! Run configuration: flat `key = value` files merged with command-line
//! flags (flags win).

use std::fmt;

use seqtrans::reference::{generate_problem, ProblemFamily, ProblemSpec};
use seqtrans::{PathSpec, Scalar, SequenceSample};

use crate::error::{CliError, CliResult};
use crate::ingest::{ingest, CsvMode, InputFormat};
use crate::registry::TransformSpec;

pub const DEFAULT_LENGTH: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Tsv,
    Json,
}

impl OutputFormat {
    pub fn parse(s: &str) -> CliResult<Self> {
        match s {
            "tsv" => Ok(OutputFormat::Tsv),
            "json" => Ok(OutputFormat::Json),
            _ => Err(CliError::config(format!("unknown output format '{s}'"))),
        }
    }
}

/// `index_constant(n)`, `order_constant(k)` or `staircase`; the short forms
/// `index:n` and `order:k` are also accepted.
pub fn parse_path(s: &str) -> CliResult<PathSpec> {
    let s = s.trim();
    if s == "staircase" {
        return Ok(PathSpec::Staircase);
    }
    let (kind, arg) = if let Some(rest) = s.strip_suffix(')') {
        rest.split_once('(')
    } else {
        s.split_once(':')
    }
    .ok_or_else(|| CliError::config(format!("cannot parse path '{s}'")))?;
    let v: usize = arg
        .trim()
        .parse()
        .map_err(|_| CliError::config(format!("path argument '{arg}' is not an index")))?;
    match kind.trim() {
        "index_constant" | "index" => Ok(PathSpec::IndexConstant(v)),
        "order_constant" | "order" => Ok(PathSpec::OrderConstant(v)),
        other => Err(CliError::config(format!("unknown path kind '{other}'"))),
    }
}

pub fn path_label(p: PathSpec) -> String {
    match p {
        PathSpec::IndexConstant(n) => format!("index_constant({n})"),
        PathSpec::OrderConstant(k) => format!("order_constant({k})"),
        PathSpec::Staircase => "staircase".into(),
    }
}

/// Where the sequence comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum ProblemSource {
    Corpus(ProblemSpec),
    File {
        path: String,
        format: InputFormat,
        mode: CsvMode,
    },
}

impl fmt::Display for ProblemSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProblemSource::Corpus(spec) => write!(f, "{};N={}", spec.family, spec.length),
            ProblemSource::File { path, .. } => write!(f, "file:{path}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub source: ProblemSource,
    /// Overrides the limit attached by the source.
    pub limit: Option<f64>,
    pub transforms: Vec<TransformSpec>,
    pub path: PathSpec,
    pub start_offset: usize,
    pub output: OutputFormat,
    pub digits: usize,
}

impl RunConfig {
    /// The sample with the limit override and start offset applied.
    pub fn load(&self) -> CliResult<SequenceSample<f64>> {
        let sample = match &self.source {
            ProblemSource::Corpus(spec) => generate_problem(spec)?,
            ProblemSource::File { path, format, mode } => ingest(path, *format, *mode)?,
        };
        let sample = match self.limit {
            Some(l) => sample.with_limit(l),
            None => sample,
        };
        Ok(sample.with_start_offset(self.start_offset)?)
    }

    /// Label identifying the problem and its preprocessing.
    pub fn problem_label(&self) -> String {
        self.source.to_string()
    }
}

/// Raw settings before defaults are applied.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Settings {
    pub problem: Option<String>,
    pub length: Option<usize>,
    pub input: Option<String>,
    pub format: Option<String>,
    pub partial_sums: Option<bool>,
    pub limit: Option<f64>,
    pub transforms: Vec<String>,
    pub path: Option<String>,
    pub start_offset: Option<usize>,
    pub output: Option<String>,
    pub digits: Option<usize>,
}

fn parse_num<T: std::str::FromStr>(key: &str, v: &str) -> CliResult<T> {
    v.trim()
        .parse()
        .map_err(|_| CliError::config(format!("{key}: cannot parse '{v}'")))
}

fn parse_bool(key: &str, v: &str) -> CliResult<bool> {
    match v.trim() {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(CliError::config(format!("{key}: expected true or false, got '{v}'"))),
    }
}

impl Settings {
    /// Parses `key = value` lines; `#` starts a comment. `transform` may be
    /// repeated, `transforms` takes a `;`-separated list.
    pub fn parse_file(text: &str) -> CliResult<Self> {
        let mut s = Settings::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = |e: CliError| CliError::config(format!("config line {}: {e}", i + 1));
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| at(CliError::config(format!("expected key = value, got '{line}'"))))?;
            let (k, v) = (k.trim(), v.trim());
            let r: CliResult<()> = (|| {
                match k {
                    "problem" => s.problem = Some(v.into()),
                    "length" => s.length = Some(parse_num(k, v)?),
                    "input" => s.input = Some(v.into()),
                    "format" => s.format = Some(v.into()),
                    "partial_sums" => s.partial_sums = Some(parse_bool(k, v)?),
                    "limit" => s.limit = Some(parse_num(k, v)?),
                    "transform" => s.transforms.push(v.into()),
                    "transforms" => s
                        .transforms
                        .extend(v.split(';').map(str::trim).filter(|t| !t.is_empty()).map(String::from)),
                    "path" => s.path = Some(v.into()),
                    "start_offset" => s.start_offset = Some(parse_num(k, v)?),
                    "output" => s.output = Some(v.into()),
                    "digits" => s.digits = Some(parse_num(k, v)?),
                    _ => return Err(CliError::config(format!("unknown key '{k}'"))),
                }
                Ok(())
            })();
            r.map_err(at)?;
        }
        Ok(s)
    }

    pub fn load_file(path: &str) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_string(),
            source,
        })?;
        Self::parse_file(&text)
    }

    /// `over` wins wherever it is set; a non-empty transform list replaces
    /// the base list.
    pub fn merge(self, over: Settings) -> Settings {
        Settings {
            problem: over.problem.or(self.problem),
            length: over.length.or(self.length),
            input: over.input.or(self.input),
            format: over.format.or(self.format),
            partial_sums: over.partial_sums.or(self.partial_sums),
            limit: over.limit.or(self.limit),
            transforms: if over.transforms.is_empty() {
                self.transforms
            } else {
                over.transforms
            },
            path: over.path.or(self.path),
            start_offset: over.start_offset.or(self.start_offset),
            output: over.output.or(self.output),
            digits: over.digits.or(self.digits),
        }
    }

    pub fn source(&self) -> CliResult<ProblemSource> {
        match (&self.problem, &self.input) {
            (Some(_), Some(_)) => Err(CliError::config("give either a problem or an input file, not both")),
            (None, None) => Err(CliError::config("no problem or input file given")),
            (Some(p), None) => {
                let family: ProblemFamily = p
                    .parse()
                    .map_err(|e: seqtrans::Error| CliError::config(e.to_string()))?;
                Ok(ProblemSource::Corpus(ProblemSpec::new(
                    family,
                    self.length.unwrap_or(DEFAULT_LENGTH),
                )))
            }
            (None, Some(path)) => {
                let format = match &self.format {
                    Some(f) => InputFormat::parse(f)?,
                    None => InputFormat::infer(path),
                };
                let mode = if self.partial_sums.unwrap_or(false) {
                    CsvMode::Values
                } else {
                    CsvMode::Terms
                };
                Ok(ProblemSource::File {
                    path: path.clone(),
                    format,
                    mode,
                })
            }
        }
    }

    pub fn into_run_config(self, need_transforms: bool) -> CliResult<RunConfig> {
        let transforms = self
            .transforms
            .iter()
            .map(|t| t.parse())
            .collect::<CliResult<Vec<TransformSpec>>>()?;
        if need_transforms && transforms.is_empty() {
            return Err(CliError::config("at least one transform is required"));
        }
        let digits = self.digits.unwrap_or(f64::max_digits());
        if digits == 0 || digits > f64::max_digits() {
            return Err(CliError::config(format!(
                "digits must be in 1..={}, got {digits}",
                f64::max_digits()
            )));
        }
        Ok(RunConfig {
            source: self.source()?,
            limit: self.limit,
            transforms,
            path: parse_path(self.path.as_deref().unwrap_or("index_constant(0)"))?,
            start_offset: self.start_offset.unwrap_or(0),
            output: OutputFormat::parse(self.output.as_deref().unwrap_or("tsv"))?,
            digits,
        })
    }
}
