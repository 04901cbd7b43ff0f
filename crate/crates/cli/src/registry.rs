//! Transform names, their parameters and how they map onto the library.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use seqtrans::classic::{brezinski_theta, iterated_aitken, iterated_theta, wynn_epsilon};
use seqtrans::interpolatory::{
    bdg_transform, estimate_decay, iterated_rho_standard, median_tail, osada_rho, rho_standard, richardson_standard,
};
use seqtrans::levin::{levin_variant, weniger_variant, RemainderEstimateKind};
use seqtrans::{GuardPolicy, SequenceSample, TransformTable};

use crate::error::{CliError, CliResult};

/// Registered transform names, in documentation order.
pub const TRANSFORMS: &[&str] = &[
    "levin_u",
    "levin_t",
    "levin_v",
    "levin_d",
    "weniger_y",
    "weniger_tau",
    "weniger_phi",
    "weniger_delta",
    "aitken",
    "epsilon",
    "theta",
    "theta_iterated",
    "richardson",
    "rho",
    "rho_iterated",
    "rho_osada",
    "bdg",
    "pade_epsilon",
];

/// Accepted aliases for registry names.
fn canonical(name: &str) -> &str {
    match name {
        "wynn_epsilon" => "epsilon",
        "rho_standard" => "rho",
        "richardson_standard" => "richardson",
        "iterated_aitken" => "aitken",
        other => other,
    }
}

fn allowed_params(name: &str) -> &'static [&'static str] {
    match name {
        n if n.starts_with("levin_") || n.starts_with("weniger_") => &["zeta"],
        "richardson" => &["beta"],
        "rho_osada" | "bdg" => &["alpha"],
        _ => &[],
    }
}

/// A transform name with its `key=value` parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformSpec {
    pub name: String,
    pub params: BTreeMap<String, f64>,
}

impl FromStr for TransformSpec {
    type Err = CliError;

    /// `name` or `name:key=value,key=value`.
    fn from_str(text: &str) -> CliResult<Self> {
        let (name, body) = text.trim().split_once(':').unwrap_or((text.trim(), ""));
        let name = canonical(name.trim());
        if !TRANSFORMS.contains(&name) {
            return Err(CliError::config(format!(
                "unknown transform '{name}' (known: {})",
                TRANSFORMS.join(", ")
            )));
        }
        let allowed = allowed_params(name);
        let mut params = BTreeMap::new();
        for item in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| CliError::config(format!("{name}: expected key=value, got '{item}'")))?;
            let k = k.trim();
            if !allowed.contains(&k) {
                return Err(CliError::config(format!("{name} takes no parameter '{k}'")));
            }
            let v: f64 = v
                .trim()
                .parse()
                .map_err(|_| CliError::config(format!("{name}: '{v}' is not a number")))?;
            params.insert(k.to_string(), v);
        }
        Ok(TransformSpec {
            name: name.to_string(),
            params,
        })
    }
}

impl fmt::Display for TransformSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)?;
        for (i, (k, v)) in self.params.iter().enumerate() {
            write!(f, "{}{k}={v}", if i == 0 { ':' } else { ',' })?;
        }
        Ok(())
    }
}

/// A computed table plus the parameter values actually used (defaults and
/// estimated exponents filled in).
pub struct Evaluated {
    pub table: TransformTable<f64>,
    pub params: BTreeMap<String, f64>,
}

/// Decay exponent from the median of the last quarter of `T_n`.
pub fn estimate_alpha(sample: &SequenceSample<f64>, guard: &GuardPolicy) -> seqtrans::Result<Option<f64>> {
    Ok(median_tail(&estimate_decay(sample, guard)?))
}

fn kind(suffix: &str) -> RemainderEstimateKind<f64> {
    match suffix {
        "u" | "y" => RemainderEstimateKind::U,
        "t" | "tau" => RemainderEstimateKind::T,
        "v" | "phi" => RemainderEstimateKind::V,
        _ => RemainderEstimateKind::D,
    }
}

impl TransformSpec {
    pub fn evaluate(&self, sample: &SequenceSample<f64>, guard: &GuardPolicy) -> seqtrans::Result<Evaluated> {
        let mut params = self.params.clone();
        let mut get = |k: &str, default: f64| *params.entry(k.to_string()).or_insert(default);
        let name = self.name.as_str();
        let table = if let Some(s) = name.strip_prefix("levin_") {
            levin_variant(sample, &kind(s), get("zeta", 1.0), guard)?
        } else if let Some(s) = name.strip_prefix("weniger_") {
            weniger_variant(sample, &kind(s), get("zeta", 1.0), guard)?
        } else {
            match name {
                "aitken" => iterated_aitken(sample, guard)?,
                "epsilon" => wynn_epsilon(sample, guard)?.approximants(),
                "pade_epsilon" => {
                    if sample.terms().is_none() {
                        return Err(seqtrans::Error::InvalidParameter(
                            "pade_epsilon needs series terms".into(),
                        ));
                    }
                    wynn_epsilon(sample, guard)?.approximants()
                }
                "theta" => brezinski_theta(sample, guard)?.approximants(),
                "theta_iterated" => iterated_theta(sample, guard)?,
                "richardson" => richardson_standard(sample, get("beta", 1.0), guard)?,
                "rho" => rho_standard(sample, guard)?.approximants(),
                "rho_iterated" => iterated_rho_standard(sample, guard)?,
                "rho_osada" | "bdg" => {
                    let alpha = match self.params.get("alpha") {
                        Some(&a) => a,
                        None => match estimate_alpha(sample, guard)? {
                            Some(a) if a > 0.0 => a,
                            other => {
                                return Err(seqtrans::Error::InvalidParameter(format!(
                                    "alpha estimate {other:?} is unusable; pass alpha explicitly"
                                )))
                            }
                        },
                    };
                    params.insert("alpha".into(), alpha);
                    if name == "bdg" {
                        bdg_transform(sample, alpha, guard)?
                    } else {
                        osada_rho(sample, alpha, guard)?.approximants()
                    }
                }
                _ => unreachable!("registry names are validated on parse"),
            }
        };
        Ok(Evaluated { table, params })
    }
}
