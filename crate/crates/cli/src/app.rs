//! Command-line front end.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use seqtrans::interpolatory::{estimate_decay, median_tail};
use seqtrans::pade::{pade_direct, pade_via_epsilon, staircase_sequence, PowerSeries};
use seqtrans::reference::{generate_problem, ProblemFamily, ProblemSpec};
use seqtrans::GuardPolicy;
use serde::Serialize;

use crate::compare::compare;
use crate::config::{OutputFormat, ProblemSource, RunConfig, Settings, DEFAULT_LENGTH};
use crate::error::{CliError, CliResult};
use crate::report::{build_report, fmt_num, round_to};

#[derive(Parser, Debug)]
#[command(
    name = "seqtrans",
    version,
    about = "Sequence transformations and convergence reports"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply transforms along a table path and report errors.
    Run(RunArgs),
    /// Error table of several transforms at matching data budgets.
    Compare(CompareArgs),
    /// Estimate the decay exponent of a logarithmically convergent sequence.
    EstimateAlpha(SourceArgs),
    /// Padé approximants of a power series from the epsilon table.
    Pade(PadeArgs),
    /// Write a corpus problem to a file.
    Gen(GenArgs),
}

#[derive(Args, Debug, Default)]
struct SourceArgs {
    /// Config file with key = value lines; flags override it.
    #[arg(long)]
    config: Option<String>,
    /// Corpus problem, e.g. zeta_dirichlet:z=1.1
    #[arg(short, long)]
    problem: Option<String>,
    /// Last index N of a corpus problem (s_0 ..= s_N).
    #[arg(short = 'N', long)]
    length: Option<usize>,
    /// Input file (`-` for stdin).
    #[arg(short, long)]
    input: Option<String>,
    /// Input format: csv or json (default from the extension).
    #[arg(long)]
    format: Option<String>,
    /// CSV rows are partial sums rather than terms.
    #[arg(long)]
    partial_sums: bool,
    /// Known limit, overriding any attached to the problem.
    #[arg(long, allow_hyphen_values = true)]
    limit: Option<f64>,
    /// Drop this many leading elements.
    #[arg(long)]
    start_offset: Option<usize>,
    /// Output format: tsv or json.
    #[arg(short, long)]
    output: Option<String>,
    /// Significant digits shown.
    #[arg(long)]
    digits: Option<usize>,
}

impl SourceArgs {
    fn settings(&self) -> Settings {
        Settings {
            problem: self.problem.clone(),
            length: self.length,
            input: self.input.clone(),
            format: self.format.clone(),
            partial_sums: self.partial_sums.then_some(true),
            limit: self.limit,
            start_offset: self.start_offset,
            output: self.output.clone(),
            digits: self.digits,
            ..Default::default()
        }
    }

    fn base(&self) -> CliResult<Settings> {
        match &self.config {
            Some(path) => Settings::load_file(path),
            None => Ok(Settings::default()),
        }
    }
}

#[derive(Args, Debug)]
struct RunArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Transform, e.g. levin_u or rho_osada:alpha=0.5 (repeatable).
    #[arg(short, long = "transform")]
    transforms: Vec<String>,
    /// index_constant(n), order_constant(k) or staircase.
    #[arg(long)]
    path: Option<String>,
}

impl RunArgs {
    fn settings(&self, base: Settings) -> Settings {
        let mut flags = self.source.settings();
        flags.transforms = self.transforms.clone();
        flags.path = self.path.clone();
        base.merge(flags)
    }
}

#[derive(Args, Debug)]
struct CompareArgs {
    /// Config files to merge; each may name its own transforms and path.
    #[arg(long = "with")]
    with: Vec<String>,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args, Debug)]
struct PadeArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Evaluation point for file input (coefficients are read as terms).
    #[arg(long, allow_hyphen_values = true)]
    z: Option<f64>,
    /// All [l/m] with l + m <= N instead of the staircase.
    #[arg(long)]
    table: bool,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(short, long)]
    problem: String,
    #[arg(short = 'N', long, default_value_t = DEFAULT_LENGTH)]
    length: usize,
    /// json or csv (terms, one per line).
    #[arg(long, default_value = "json")]
    format: String,
    /// Output file; stdout if absent.
    #[arg(long)]
    out: Option<String>,
}

/// Runs the CLI on `args` (including the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run_app<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok((text, failure)) => {
            let _ = out.write_all(text.as_bytes());
            match failure {
                Some(e) => {
                    let _ = writeln!(err, "error: {e}");
                    e.exit_code()
                }
                None => 0,
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Rendered output plus an error that still lets the output be printed.
type Output = (String, Option<CliError>);

fn dispatch(cmd: Command) -> CliResult<Output> {
    match cmd {
        Command::Run(a) => {
            let cfg = a.settings(a.source.base()?).into_run_config(true)?;
            run(&cfg)
        }
        Command::Compare(a) => {
            let flags = a.run.settings(a.run.source.base()?);
            let configs = if a.with.is_empty() {
                vec![flags.into_run_config(true)?]
            } else {
                a.with
                    .iter()
                    .map(|p| Settings::load_file(p).map(|s| s.merge(flags.clone())))
                    .map(|s| s?.into_run_config(true))
                    .collect::<CliResult<Vec<_>>>()?
            };
            let table = compare(&configs)?;
            let text = match configs[0].output {
                OutputFormat::Tsv => table.to_tsv(),
                OutputFormat::Json => table.to_json(),
            };
            let failed = table.failures.iter().all(Option::is_some);
            Ok((text, failed.then_some(CliError::TotalFailure)))
        }
        Command::EstimateAlpha(a) => {
            let cfg = a.base()?.merge(a.settings()).into_run_config(false)?;
            estimate_alpha(&cfg)
        }
        Command::Pade(a) => {
            let cfg = a.source.base()?.merge(a.source.settings()).into_run_config(false)?;
            pade(&cfg, a.z, a.table)
        }
        Command::Gen(a) => gen(&a).map(|t| (t, None)),
    }
}

pub fn run(cfg: &RunConfig) -> CliResult<Output> {
    let sample = cfg.load()?;
    let report = build_report(cfg, &sample);
    let text = match cfg.output {
        OutputFormat::Tsv => report.to_tsv(),
        OutputFormat::Json => report.to_json(),
    };
    Ok((text, report.all_failed().then_some(CliError::TotalFailure)))
}

#[derive(Serialize)]
struct AlphaRow {
    n: usize,
    value: Option<f64>,
    valid: bool,
}

#[derive(Serialize)]
struct AlphaReport {
    problem: String,
    estimates: Vec<AlphaRow>,
    median_tail: Option<f64>,
}

fn estimate_alpha(cfg: &RunConfig) -> CliResult<Output> {
    let sample = cfg.load()?;
    let t = estimate_decay(&sample, &GuardPolicy::default())?;
    let median = median_tail(&t).map(|v| round_to(v, cfg.digits));
    let report = AlphaReport {
        problem: cfg.problem_label(),
        estimates: t
            .iter()
            .enumerate()
            .map(|(n, v)| AlphaRow {
                n,
                value: v.map(|x| round_to(x, cfg.digits)),
                valid: v.is_some(),
            })
            .collect(),
        median_tail: median,
    };
    let text = match cfg.output {
        OutputFormat::Json => json(&report),
        OutputFormat::Tsv => {
            let mut s = format!("# problem\t{}\nn\tT_n\tvalid\n", report.problem);
            for r in &report.estimates {
                let v = r.value.map_or_else(|| "invalid".into(), fmt_num);
                let _ = writeln!(s, "{}\t{v}\t{}", r.n, r.valid);
            }
            let _ = writeln!(s, "# median_tail\t{}", median.map_or_else(|| "NA".into(), fmt_num));
            s
        }
    };
    Ok((text, median.is_none().then_some(CliError::TotalFailure)))
}

#[derive(Serialize)]
struct PadeRow {
    l: usize,
    m: usize,
    epsilon: Option<f64>,
    direct: Option<f64>,
    abs_error: Option<f64>,
    valid: bool,
}

#[derive(Serialize)]
struct PadeReport {
    problem: String,
    z: f64,
    limit: Option<f64>,
    rows: Vec<PadeRow>,
}

fn series_of(cfg: &RunConfig, z: Option<f64>) -> CliResult<(PowerSeries<f64>, Option<f64>)> {
    let sample = cfg.load()?;
    let series = match &cfg.source {
        ProblemSource::Corpus(spec) if z.is_none() => spec
            .power_series()
            .ok_or_else(|| CliError::config(format!("{} is not a power series family", spec.family)))??,
        _ => {
            let terms = sample
                .terms()
                .ok_or_else(|| CliError::config("pade needs series terms, not partial sums"))?;
            PowerSeries::new(terms.to_vec(), z.unwrap_or(1.0))?
        }
    };
    let series = if cfg.start_offset > 0 {
        PowerSeries::new(series.coefficients()[cfg.start_offset..].to_vec(), series.z())?
    } else {
        series
    };
    Ok((series, sample.limit()))
}

fn pade(cfg: &RunConfig, z: Option<f64>, full: bool) -> CliResult<Output> {
    let (series, limit) = series_of(cfg, z)?;
    let guard = GuardPolicy::default();
    let d = cfg.digits;
    let direct = |l, m| pade_direct(&series, l, m).ok().and_then(|p| p.eval(series.z()));
    let row = |l: usize, m: usize, eps: Option<f64>| {
        let best = eps.or_else(|| direct(l, m));
        PadeRow {
            l,
            m,
            epsilon: eps.map(|v| round_to(v, d)),
            direct: direct(l, m).map(|v| round_to(v, d)),
            abs_error: best.zip(limit).map(|(v, s)| round_to((v - s).abs(), d)),
            valid: best.is_some(),
        }
    };
    let rows: Vec<PadeRow> = if full {
        let table = pade_via_epsilon(&series, &guard);
        let n = series.coefficients().len() - 1;
        (0..=n)
            .flat_map(|m| (0..=n - m).map(move |l| (l, m)))
            .map(|(l, m)| row(l, m, table.value(l, m)))
            .collect()
    } else {
        staircase_sequence(&series, &guard)
            .into_iter()
            .map(|e| row(e.l, e.m, e.value))
            .collect()
    };
    let report = PadeReport {
        problem: cfg.problem_label(),
        z: series.z(),
        limit: limit.map(|l| round_to(l, d)),
        rows,
    };
    let text = match cfg.output {
        OutputFormat::Json => json(&report),
        OutputFormat::Tsv => {
            let o = |v: Option<f64>| v.map_or_else(|| "NA".to_string(), fmt_num);
            let mut s = format!(
                "# problem\t{}\n# z\t{}\nl\tm\tepsilon\tdirect\tabs_error\tvalid\n",
                report.problem,
                fmt_num(report.z)
            );
            for r in &report.rows {
                let _ = writeln!(
                    s,
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    r.l,
                    r.m,
                    o(r.epsilon),
                    o(r.direct),
                    o(r.abs_error),
                    r.valid
                );
            }
            s
        }
    };
    let none = report.rows.iter().all(|r| !r.valid);
    Ok((text, none.then_some(CliError::TotalFailure)))
}

#[derive(Serialize)]
struct GenFile<'a> {
    problem: String,
    length: usize,
    terms: &'a [f64],
    values: &'a [f64],
    limit: Option<f64>,
}

fn gen(a: &GenArgs) -> CliResult<String> {
    let family: ProblemFamily = a.problem.parse()?;
    let spec = ProblemSpec::new(family, a.length);
    let sample = generate_problem(&spec)?;
    let terms = sample.terms().expect("corpus samples carry terms");
    let text = match a.format.as_str() {
        "json" => json(&GenFile {
            problem: spec.family.to_string(),
            length: spec.length,
            terms,
            values: sample.values(),
            limit: sample.limit(),
        }),
        "csv" => terms.iter().map(|t| format!("{t:e}\n")).collect(),
        f => return Err(CliError::config(format!("unknown gen format '{f}'"))),
    };
    match &a.out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}
