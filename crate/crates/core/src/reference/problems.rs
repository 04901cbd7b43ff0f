use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::quadrature::euler_series_value;
use super::zeta::euler_maclaurin_zeta;
use crate::error::{Error, Result};
use crate::pade::PowerSeries;
use crate::sample::{make_partial_sums, SequenceSample};

/// Functions with a tabulated Maclaurin series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedFunction {
    Exp,
    /// `ln(1 + z)`
    Ln1p,
    /// `1 / (1 - z)`
    Geometric,
    Atan,
}

impl NamedFunction {
    pub fn name(self) -> &'static str {
        match self {
            NamedFunction::Exp => "exp",
            NamedFunction::Ln1p => "ln1p",
            NamedFunction::Geometric => "geometric",
            NamedFunction::Atan => "atan",
        }
    }

    /// Maclaurin coefficients `γ_0 ..= γ_n`.
    pub fn coefficients(self, n: usize) -> Vec<f64> {
        let mut out = Vec::with_capacity(n + 1);
        let mut fact = 1.0;
        for k in 0..=n {
            let c = match self {
                NamedFunction::Exp => {
                    if k > 0 {
                        fact *= k as f64;
                    }
                    1.0 / fact
                }
                NamedFunction::Ln1p if k == 0 => 0.0,
                NamedFunction::Ln1p => alternating(k + 1) / k as f64,
                NamedFunction::Geometric => 1.0,
                NamedFunction::Atan if k % 2 == 0 => 0.0,
                NamedFunction::Atan => alternating(k / 2) / k as f64,
            };
            out.push(c);
        }
        out
    }

    pub fn value(self, z: f64) -> f64 {
        match self {
            NamedFunction::Exp => z.exp(),
            NamedFunction::Ln1p => z.ln_1p(),
            NamedFunction::Geometric => 1.0 / (1.0 - z),
            NamedFunction::Atan => z.atan(),
        }
    }

    fn check(self, z: f64) -> Result<()> {
        let ok = match self {
            NamedFunction::Exp | NamedFunction::Atan => true,
            NamedFunction::Ln1p => z > -1.0,
            NamedFunction::Geometric => z != 1.0,
        };
        if ok && z.is_finite() {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("{} at z = {z}", self.name())))
        }
    }
}

fn alternating(k: usize) -> f64 {
    if k.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

impl FromStr for NamedFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "exp" => NamedFunction::Exp,
            "ln1p" | "log1p" => NamedFunction::Ln1p,
            "geometric" => NamedFunction::Geometric,
            "atan" => NamedFunction::Atan,
            _ => return Err(Error::InvalidParameter(format!("unknown function '{s}'"))),
        })
    }
}

/// Family of a corpus problem.
#[derive(Debug, Clone, PartialEq)]
pub enum ProblemFamily {
    /// Partial sums of `Σ (ν+1)^{-z}`.
    ZetaDirichlet { z: f64 },
    /// Partial sums of the Maclaurin series of `function` at `z`.
    PowerSeries { function: NamedFunction, z: f64 },
    /// Partial sums of `Σ k! (-x)^k`.
    EulerFactorial { x: f64 },
    /// `s_n = s + (n+β)^{-α} (c0 + c1/(n+β))`
    DecayModel {
        s: f64,
        alpha: f64,
        beta: f64,
        c0: f64,
        c1: f64,
    },
    /// `s_n = s + c λ^n`
    Geometric { s: f64, c: f64, lambda: f64 },
    /// `s_n = s + Σ_j c_j λ_j^n`
    ExponentialSum { s: f64, terms: Vec<(f64, f64)> },
}

/// A corpus problem: a family and the last index `N` (the sample holds
/// `s_0 ..= s_N`).
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemSpec {
    pub family: ProblemFamily,
    pub length: usize,
}

impl ProblemSpec {
    pub fn new(family: ProblemFamily, length: usize) -> Self {
        ProblemSpec { family, length }
    }

    /// Series view for the families that are power series in a variable.
    pub fn power_series(&self) -> Option<Result<PowerSeries<f64>>> {
        let n = self.length;
        match self.family {
            ProblemFamily::PowerSeries { function, z } => Some(PowerSeries::new(function.coefficients(n), z)),
            ProblemFamily::EulerFactorial { x } => Some(PowerSeries::new(factorial_coefficients(n), x)),
            _ => None,
        }
    }
}

fn factorial_coefficients(n: usize) -> Vec<f64> {
    let mut f = 1.0;
    (0..=n)
        .map(|k| {
            if k > 0 {
                f *= k as f64;
            }
            alternating(k) * f
        })
        .collect()
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn finite(name: &str, v: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(invalid(format!("{name} = {v} is not finite")))
    }
}

fn from_closed_form(values: Vec<f64>, limit: f64) -> Result<SequenceSample<f64>> {
    let terms = std::iter::once(values[0])
        .chain(values.windows(2).map(|w| w[1] - w[0]))
        .collect();
    Ok(SequenceSample::from_values_and_terms(values, terms)?.with_limit(limit))
}

/// Generates `s_0 ..= s_N` with terms, attaching the limit (or antilimit)
/// where one is known.
pub fn generate_problem(spec: &ProblemSpec) -> Result<SequenceSample<f64>> {
    let len = spec.length + 1;
    match &spec.family {
        &ProblemFamily::ZetaDirichlet { z } => {
            if finite("z", z)? <= 1.0 {
                return Err(invalid(format!("zeta_dirichlet needs z > 1, got {z}")));
            }
            let terms: Vec<f64> = (0..len).map(|v| ((v + 1) as f64).powf(-z)).collect();
            let limit = euler_maclaurin_zeta(z, 60, 12)?;
            Ok(make_partial_sums(&terms)?.with_limit(limit))
        }
        &ProblemFamily::PowerSeries { function, z } => {
            function.check(z)?;
            let mut zk = 1.0;
            let terms: Vec<f64> = function
                .coefficients(spec.length)
                .into_iter()
                .map(|c| {
                    let t = c * zk;
                    zk *= z;
                    t
                })
                .collect();
            Ok(make_partial_sums(&terms)?.with_limit(function.value(z)))
        }
        &ProblemFamily::EulerFactorial { x } => {
            if finite("x", x)? <= 0.0 {
                return Err(invalid(format!("euler_factorial needs x > 0, got {x}")));
            }
            let mut xk = 1.0;
            let terms: Vec<f64> = factorial_coefficients(spec.length)
                .into_iter()
                .map(|c| {
                    let t = c * xk;
                    xk *= x;
                    t
                })
                .collect();
            Ok(make_partial_sums(&terms)?.with_limit(euler_series_value(x)?))
        }
        &ProblemFamily::DecayModel { s, alpha, beta, c0, c1 } => {
            for (k, v) in [("s", s), ("c0", c0), ("c1", c1)] {
                finite(k, v)?;
            }
            if finite("alpha", alpha)? <= 0.0 || finite("beta", beta)? <= 0.0 {
                return Err(invalid("decay_model needs alpha > 0 and beta > 0"));
            }
            let values = (0..len)
                .map(|n| {
                    let x = n as f64 + beta;
                    s + x.powf(-alpha) * (c0 + c1 / x)
                })
                .collect();
            from_closed_form(values, s)
        }
        &ProblemFamily::Geometric { s, c, lambda } => {
            finite("s", s)?;
            finite("c", c)?;
            if finite("lambda", lambda)? == 1.0 {
                return Err(invalid("geometric needs lambda != 1"));
            }
            let values = (0..len).map(|n| s + c * lambda.powi(n as i32)).collect();
            from_closed_form(values, s)
        }
        ProblemFamily::ExponentialSum { s, terms } => {
            finite("s", *s)?;
            if terms.is_empty() {
                return Err(invalid("exponential_sum needs at least one (c, lambda) pair"));
            }
            for &(c, l) in terms {
                finite("c", c)?;
                if finite("lambda", l)? == 1.0 {
                    return Err(invalid("exponential_sum needs lambda != 1"));
                }
            }
            let values = (0..len)
                .map(|n| s + terms.iter().map(|&(c, l)| c * l.powi(n as i32)).sum::<f64>())
                .collect();
            from_closed_form(values, *s)
        }
    }
}

fn join(v: impl Iterator<Item = f64>) -> String {
    v.map(|x| x.to_string()).collect::<Vec<_>>().join(";")
}

impl fmt::Display for ProblemFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProblemFamily::ZetaDirichlet { z } => write!(f, "zeta_dirichlet:z={z}"),
            ProblemFamily::PowerSeries { function, z } => {
                write!(f, "power_series:function={},z={z}", function.name())
            }
            ProblemFamily::EulerFactorial { x } => write!(f, "euler_factorial:x={x}"),
            ProblemFamily::DecayModel { s, alpha, beta, c0, c1 } => {
                write!(f, "decay_model:s={s},alpha={alpha},beta={beta},c0={c0},c1={c1}")
            }
            ProblemFamily::Geometric { s, c, lambda } => {
                write!(f, "geometric:s={s},c={c},lambda={lambda}")
            }
            ProblemFamily::ExponentialSum { s, terms } => write!(
                f,
                "exponential_sum:s={s},c={},lambda={}",
                join(terms.iter().map(|t| t.0)),
                join(terms.iter().map(|t| t.1))
            ),
        }
    }
}

struct Params<'a>(BTreeMap<&'a str, &'a str>);

impl<'a> Params<'a> {
    fn parse(body: &'a str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for item in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| invalid(format!("expected key=value, got '{item}'")))?;
            if map.insert(k.trim(), v.trim()).is_some() {
                return Err(invalid(format!("duplicate key '{}'", k.trim())));
            }
        }
        Ok(Params(map))
    }

    fn take_str(&mut self, key: &str) -> Option<&'a str> {
        self.0.remove(key)
    }

    fn num(&mut self, key: &str, default: Option<f64>) -> Result<f64> {
        match self.take_str(key) {
            Some(v) => v
                .parse()
                .map_err(|_| invalid(format!("{key}: cannot parse '{v}' as a number"))),
            None => default.ok_or_else(|| invalid(format!("missing parameter '{key}'"))),
        }
    }

    fn list(&mut self, key: &str) -> Result<Vec<f64>> {
        let v = self
            .take_str(key)
            .ok_or_else(|| invalid(format!("missing parameter '{key}'")))?;
        v.split(';')
            .map(|x| {
                x.trim()
                    .parse()
                    .map_err(|_| invalid(format!("{key}: cannot parse '{x}' as a number")))
            })
            .collect()
    }

    fn finish(self) -> Result<()> {
        match self.0.keys().next() {
            Some(k) => Err(invalid(format!("unknown parameter '{k}'"))),
            None => Ok(()),
        }
    }
}

impl FromStr for ProblemFamily {
    type Err = Error;

    /// Parses `family:key=value,...`; `exponential_sum` takes
    /// `c=c0;c1;...` and `lambda=l0;l1;...`.
    fn from_str(text: &str) -> Result<Self> {
        let (name, body) = text.split_once(':').unwrap_or((text, ""));
        let mut p = Params::parse(body)?;
        let family = match name.trim() {
            "zeta_dirichlet" | "zeta" => ProblemFamily::ZetaDirichlet { z: p.num("z", None)? },
            "power_series" => ProblemFamily::PowerSeries {
                function: p
                    .take_str("function")
                    .ok_or_else(|| invalid("missing parameter 'function'"))?
                    .parse()?,
                z: p.num("z", None)?,
            },
            "euler_factorial" | "euler" => ProblemFamily::EulerFactorial {
                x: p.num("x", Some(1.0))?,
            },
            "decay_model" => ProblemFamily::DecayModel {
                s: p.num("s", Some(0.0))?,
                alpha: p.num("alpha", None)?,
                beta: p.num("beta", Some(1.0))?,
                c0: p.num("c0", Some(1.0))?,
                c1: p.num("c1", Some(0.0))?,
            },
            "geometric" => ProblemFamily::Geometric {
                s: p.num("s", None)?,
                c: p.num("c", None)?,
                lambda: p.num("lambda", None)?,
            },
            "exponential_sum" => {
                let s = p.num("s", Some(0.0))?;
                let c = p.list("c")?;
                let l = p.list("lambda")?;
                if c.len() != l.len() {
                    return Err(invalid(format!("{} coefficients for {} ratios", c.len(), l.len())));
                }
                ProblemFamily::ExponentialSum {
                    s,
                    terms: c.into_iter().zip(l).collect(),
                }
            }
            other => return Err(invalid(format!("unknown problem family '{other}'"))),
        };
        p.finish()?;
        Ok(family)
    }
}
