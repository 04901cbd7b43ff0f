//! Transformations with explicit remainder estimates `ω_n`, built from the
//! weighted difference operator `Δ^k w_k(n)`: Levin's ℒ (power weights)
//! and Weniger's 𝒮 (Pochhammer weights), with the u/t/v/d estimates.

use crate::error::{Error, Result};
use crate::guard::GuardPolicy;
use crate::reference::pochhammer;
use crate::sample::SequenceSample;
use crate::scalar::Scalar;
use crate::table::TransformTable;

/// Choice of remainder estimate `ω_n`.
#[derive(Debug, Clone, PartialEq)]
pub enum RemainderEstimateKind<S> {
    /// `(ζ + n) Δs_{n-1}`
    U,
    /// `Δs_{n-1}`
    T,
    /// `Δs_{n-1} Δs_n / (Δs_{n-1} - Δs_n)`
    V,
    /// `Δs_n`
    D,
    /// User-supplied `ω_0, ω_1, ...`
    Explicit(Vec<S>),
}

/// Remainder estimates `ω_n` for `n = first ..`.
#[derive(Debug, Clone, PartialEq)]
pub struct RemainderEstimates<S> {
    pub first: usize,
    pub values: Vec<S>,
    /// Input elements past `n` that `ω_n` reads.
    pub lookahead: usize,
}

impl<S: Scalar> RemainderEstimates<S> {
    pub fn get(&self, n: usize) -> Option<S> {
        self.values.get(n.checked_sub(self.first)?).copied()
    }

    fn end(&self) -> usize {
        self.first + self.values.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightFamily {
    /// `w_k(n) = (n + ζ)^(k-1)`, Levin's transformation.
    LevinPower(f64),
    /// `w_k(n) = (n + ζ)_{k-1}`, Weniger's transformation.
    WenigerPochhammer(f64),
}

impl WeightFamily {
    pub fn zeta(&self) -> f64 {
        match *self {
            WeightFamily::LevinPower(z) | WeightFamily::WenigerPochhammer(z) => z,
        }
    }

    /// `w_k(n + j) / w_k(n + k)`, the scaled weight ratio.
    fn ratio(&self, k: usize, n: usize, j: usize) -> f64 {
        let z = self.zeta();
        let x = z + (n + j) as f64;
        let y = z + (n + k) as f64;
        match self {
            WeightFamily::LevinPower(_) => (x / y).powi(k as i32 - 1),
            // (x)_{k-1} / (y)_{k-1} as a product of termwise quotients
            WeightFamily::WenigerPochhammer(_) => (0..k - 1).map(|i| (x + i as f64) / (y + i as f64)).product(),
        }
    }
}

fn check_zeta(zeta: f64) -> Result<()> {
    if zeta > 0.0 && zeta.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("zeta must be positive, got {zeta}")))
    }
}

/// Remainder estimates of the chosen kind. The u, t and v estimates read
/// `Δs_{n-1}` and therefore start at `n = 1`; d and v read `Δs_n` and end one
/// element early.
pub fn omega_sequence<S: Scalar>(
    sample: &SequenceSample<S>,
    kind: &RemainderEstimateKind<S>,
    zeta: f64,
) -> Result<RemainderEstimates<S>> {
    check_zeta(zeta)?;
    let len = sample.len();
    let d = |n: usize| sample.forward_difference(n);
    let need = |min: usize| {
        if len < min {
            Err(Error::InsufficientData(format!(
                "{len} elements, remainder estimate needs {min}"
            )))
        } else {
            Ok(())
        }
    };
    let (first, values, lookahead) = match kind {
        RemainderEstimateKind::U => {
            need(2)?;
            let v = (1..len).map(|n| d(n - 1).unwrap().scale(zeta + n as f64)).collect();
            (1, v, 0)
        }
        RemainderEstimateKind::T => {
            need(2)?;
            (1, (1..len).map(|n| d(n - 1).unwrap()).collect(), 0)
        }
        RemainderEstimateKind::D => {
            need(2)?;
            (0, (0..len - 1).map(|n| d(n).unwrap()).collect(), 1)
        }
        RemainderEstimateKind::V => {
            need(3)?;
            let mut v = Vec::with_capacity(len - 2);
            for n in 1..len - 1 {
                let (a, b) = (d(n - 1).unwrap(), d(n).unwrap());
                let den = a - b;
                if den.modulus() == 0.0 {
                    return Err(Error::SingularRemainderEstimate(n));
                }
                v.push(a * b / den);
            }
            (1, v, 1)
        }
        RemainderEstimateKind::Explicit(w) => {
            if w.len() < len {
                return Err(Error::InvalidParameter(format!(
                    "{} remainder estimates for {len} elements",
                    w.len()
                )));
            }
            (0, w[..len].to_vec(), 0)
        }
    };
    if let Some(i) = values.iter().position(|w: &S| w.modulus() == 0.0 || !w.is_finite()) {
        return Err(Error::ZeroRemainderEstimate(first + i));
    }
    Ok(RemainderEstimates {
        first,
        values,
        lookahead,
    })
}

fn binomials(k: usize) -> Vec<f64> {
    let mut c = vec![1.0; k + 1];
    for j in 1..=k {
        c[j] = c[j - 1] * (k + 1 - j) as f64 / j as f64;
    }
    c
}

/// `𝒯_k^(n) = Δ^k{w_k(n) s_n/ω_n} / Δ^k{w_k(n)/ω_n}` via the explicit
/// binomial sums with weights scaled by `w_k(n+k)`.
pub fn weighted_ratio_transform<S: Scalar>(
    sample: &SequenceSample<S>,
    omegas: &RemainderEstimates<S>,
    family: WeightFamily,
    guard: &GuardPolicy,
) -> Result<TransformTable<S>> {
    check_zeta(family.zeta())?;
    if let Some(i) = omegas.values.iter().position(|w| w.modulus() == 0.0) {
        return Err(Error::ZeroRemainderEstimate(omegas.first + i));
    }
    let s = sample.values();
    let end = omegas.end().min(s.len());
    let first = omegas.first;
    let mut table = TransformTable::new(s, 1).with_lookahead(omegas.lookahead);
    for k in 1.. {
        if first + k >= end {
            break;
        }
        let c = binomials(k);
        let cells = (first..end - k)
            .map(|n| {
                let (mut num, mut den) = (S::zero(), S::zero());
                for j in 0..=k {
                    let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                    let w = S::from_f64(sign * c[j] * family.ratio(k, n, j)) / omegas.get(n + j)?;
                    num = num + w * s[n + j];
                    den = den + w;
                }
                guard.divide(num, den)
            })
            .collect();
        table.push_column(first, cells);
    }
    Ok(table)
}

/// Levin's u, t, v, d transformations (or ℒ with explicit estimates).
pub fn levin_variant<S: Scalar>(
    sample: &SequenceSample<S>,
    kind: &RemainderEstimateKind<S>,
    zeta: f64,
    guard: &GuardPolicy,
) -> Result<TransformTable<S>> {
    let omegas = omega_sequence(sample, kind, zeta)?;
    weighted_ratio_transform(sample, &omegas, WeightFamily::LevinPower(zeta), guard)
}

/// Weniger's y, τ, φ, δ transformations (or 𝒮 with explicit estimates).
pub fn weniger_variant<S: Scalar>(
    sample: &SequenceSample<S>,
    kind: &RemainderEstimateKind<S>,
    zeta: f64,
    guard: &GuardPolicy,
) -> Result<TransformTable<S>> {
    let omegas = omega_sequence(sample, kind, zeta)?;
    weighted_ratio_transform(sample, &omegas, WeightFamily::WenigerPochhammer(zeta), guard)
}

/// Unscaled weight `w_k(n)` for `k >= 1`.
pub fn weight(family: WeightFamily, k: usize, n: usize) -> f64 {
    debug_assert!(k >= 1);
    let x = family.zeta() + n as f64;
    match family {
        WeightFamily::LevinPower(_) => x.powi(k as i32 - 1),
        WeightFamily::WenigerPochhammer(_) => pochhammer(x, k - 1),
    }
}
