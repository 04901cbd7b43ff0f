//! Transformations derived from interpolation: Richardson extrapolation
//! (Neville's scheme), Wynn's rho algorithm and its iteration, Osada's
//! variant, the Bjørstad–Dahlquist–Grosse transformation and the decay
//! parameter estimator.

use crate::classic::{iterate_window, require_len};
use crate::error::{Error, Result};
use crate::guard::GuardPolicy;
use crate::rhombus::{rhombus, EvenOrderTable};
use crate::sample::SequenceSample;
use crate::scalar::Scalar;
use crate::table::TransformTable;

pub type RhoTable<S> = EvenOrderTable<S>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Polynomial extrapolation to `x = 0`; points decrease.
    ToZero,
    /// Rational extrapolation to `x = ∞`; points increase.
    ToInfinity,
}

/// Interpolation points `x_n` paired with the sequence elements.
#[derive(Debug, Clone, PartialEq)]
pub struct InterpolationPoints {
    x: Vec<f64>,
    direction: Direction,
}

impl InterpolationPoints {
    pub fn new(x: Vec<f64>, direction: Direction) -> Result<Self> {
        if x.iter().any(|&v| !(v > 0.0 && v.is_finite())) {
            return Err(Error::InvalidParameter("interpolation points must be positive".into()));
        }
        for w in x.windows(2) {
            if w[0] == w[1] {
                return Err(Error::SingularStep);
            }
            let ordered = match direction {
                Direction::ToZero => w[0] > w[1],
                Direction::ToInfinity => w[0] < w[1],
            };
            if !ordered {
                return Err(Error::InvalidParameter(format!(
                    "interpolation points are not monotone for {direction:?}"
                )));
            }
        }
        Ok(InterpolationPoints { x, direction })
    }

    /// `x_n = 1 / (n + beta)`.
    pub fn reciprocal(len: usize, beta: f64) -> Result<Self> {
        check_positive("beta", beta)?;
        Self::new((0..len).map(|n| 1.0 / (n as f64 + beta)).collect(), Direction::ToZero)
    }

    /// `x_n = n + 1`.
    pub fn standard(len: usize) -> Self {
        InterpolationPoints {
            x: (0..len).map(|n| n as f64 + 1.0).collect(),
            direction: Direction::ToInfinity,
        }
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.x
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    fn require(&self, direction: Direction, len: usize) -> Result<()> {
        if self.direction != direction {
            return Err(Error::InvalidParameter(format!(
                "points extrapolate {:?}, transform needs {direction:?}",
                self.direction
            )));
        }
        if self.x.len() < len {
            return Err(Error::InvalidParameter(format!(
                "{} interpolation points for {len} elements",
                self.x.len()
            )));
        }
        Ok(())
    }
}

/// Decay exponent and shift of `s_n = s + (n+β)^(-α) Σ c_j / (n+β)^j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayModelParams {
    pub alpha: f64,
    pub beta: f64,
}

impl DecayModelParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        check_positive("alpha", alpha)?;
        check_positive("beta", beta)?;
        Ok(DecayModelParams { alpha, beta })
    }
}

fn check_positive(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{name} must be positive, got {v}")))
    }
}

/// Richardson extrapolation via Neville's scheme at `x = 0`.
pub fn neville_richardson<S: Scalar>(
    sample: &SequenceSample<S>,
    points: &InterpolationPoints,
    guard: &GuardPolicy,
) -> Result<TransformTable<S>> {
    points.require(Direction::ToZero, sample.len())?;
    let x = points.as_slice();
    Ok(iterate_window(sample.values(), 2, 1, |k, n, w| {
        let (lo, hi) = (x[n], x[n + k + 1]);
        let num = w[1].scale(lo) - w[0].scale(hi);
        guard.divide(num, S::from_f64(lo - hi))
    }))
}

/// Richardson extrapolation with `x_n = 1/(n+β)`, in the Λ recursion form.
pub fn richardson_standard<S: Scalar>(
    sample: &SequenceSample<S>,
    beta: f64,
    _guard: &GuardPolicy,
) -> Result<TransformTable<S>> {
    check_positive("beta", beta)?;
    Ok(iterate_window(sample.values(), 2, 1, |k, n, w| {
        Some(w[1] + (w[1] - w[0]).scale((beta + n as f64) / (k as f64 + 1.0)))
    }))
}

/// Explicit binomial-sum form of `Λ_k^(n)(β, s_n)`.
pub fn richardson_closed_form<S: Scalar>(values: &[S], n: usize, k: usize, beta: f64) -> Option<S> {
    if n + k >= values.len() {
        return None;
    }
    let mut inv_fact = vec![1.0; k + 1];
    for j in 1..=k {
        inv_fact[j] = inv_fact[j - 1] / j as f64;
    }
    let sum = (0..=k).fold(S::zero(), |acc, j| {
        let sign = if (j + k).is_multiple_of(2) { 1.0 } else { -1.0 };
        let w = sign * (beta + (n + j) as f64).powi(k as i32) * inv_fact[j] * inv_fact[k - j];
        acc + values[n + j].scale(w)
    });
    Some(sum)
}

/// Wynn's rho algorithm with user-supplied points.
pub fn wynn_rho<S: Scalar>(
    sample: &SequenceSample<S>,
    points: &InterpolationPoints,
    guard: &GuardPolicy,
) -> Result<RhoTable<S>> {
    points.require(Direction::ToInfinity, sample.len())?;
    let x = points.as_slice();
    let raw = rhombus(sample.values(), |j, n| x[n + j + 1] - x[n], guard);
    Ok(EvenOrderTable::new(raw, 2))
}

/// Rho algorithm with `x_n = n + 1`.
pub fn rho_standard<S: Scalar>(sample: &SequenceSample<S>, guard: &GuardPolicy) -> Result<RhoTable<S>> {
    require_len(sample, 3)?;
    let raw = rhombus(sample.values(), |j, _| j as f64 + 1.0, guard);
    Ok(EvenOrderTable::new(raw, 2))
}

/// Osada's rho variant for a known decay exponent `alpha`.
pub fn osada_rho<S: Scalar>(sample: &SequenceSample<S>, alpha: f64, guard: &GuardPolicy) -> Result<RhoTable<S>> {
    check_positive("alpha", alpha)?;
    require_len(sample, 3)?;
    let raw = rhombus(sample.values(), |j, _| j as f64 + alpha, guard);
    Ok(EvenOrderTable::new(raw, 2))
}

/// Closed form of `ρ_2^(n)` from three elements and their points.
pub fn rho2_closed_form<S: Scalar>(s: [S; 3], x: [f64; 3], guard: &GuardPolicy) -> Result<S> {
    let (d0, d1) = (s[1] - s[0], s[2] - s[1]);
    let num = (d1 * d0).scale(x[2] - x[0]);
    let den = d0.scale(x[2] - x[1]) - d1.scale(x[1] - x[0]);
    Ok(s[1] + guard.divide(num, den).ok_or(Error::SingularStep)?)
}

/// Closed form of Osada's `ρ̄_2^(n)`.
pub fn osada_rho2_closed_form<S: Scalar>(s: [S; 3], alpha: f64, guard: &GuardPolicy) -> Result<S> {
    let (d0, d1) = (s[1] - s[0], s[2] - s[1]);
    let q = guard.divide(d0 * d1, d1 - d0).ok_or(Error::SingularStep)?;
    Ok(s[1] - q.scale((alpha + 1.0) / alpha))
}

/// Iterated rho transformation `𝒲_k^(n)` for general points.
pub fn iterated_rho<S: Scalar>(
    sample: &SequenceSample<S>,
    points: &InterpolationPoints,
    guard: &GuardPolicy,
) -> Result<TransformTable<S>> {
    require_len(sample, 3)?;
    points.require(Direction::ToInfinity, sample.len())?;
    let x = points.as_slice();
    Ok(iterate_window(sample.values(), 3, 2, |k, n, w| {
        let (d0, d1) = (w[1] - w[0], w[2] - w[1]);
        let num = (d1 * d0).scale(x[n + 2 * k + 2] - x[n]);
        let den = d0.scale(x[n + 2 * k + 2] - x[n + 1]) - d1.scale(x[n + 2 * k + 1] - x[n]);
        Some(w[1] + guard.divide(num, den)?)
    }))
}

/// Iterated rho transformation specialised to `x_n = n + 1`.
pub fn iterated_rho_standard<S: Scalar>(sample: &SequenceSample<S>, guard: &GuardPolicy) -> Result<TransformTable<S>> {
    require_len(sample, 3)?;
    Ok(iterate_window(sample.values(), 3, 2, |k, _, w| {
        let (d0, d1) = (w[1] - w[0], w[2] - w[1]);
        let num = (d1 * d0).scale(2.0 * k as f64 + 2.0);
        let den = (d1 - d0).scale(2.0 * k as f64 + 1.0);
        Some(w[1] - guard.divide(num, den)?)
    }))
}

/// Bjørstad–Dahlquist–Grosse transformation `𝒲̄_k^(n)`: Osada's `ρ̄_2`
/// iterated with the exponent raised by two per step.
pub fn bdg_transform<S: Scalar>(
    sample: &SequenceSample<S>,
    alpha: f64,
    guard: &GuardPolicy,
) -> Result<TransformTable<S>> {
    check_positive("alpha", alpha)?;
    require_len(sample, 3)?;
    Ok(iterate_window(sample.values(), 3, 2, |k, _, w| {
        let a = 2.0 * k as f64 + alpha;
        let (d0, d1) = (w[1] - w[0], w[2] - w[1]);
        let q = guard.divide(d1 * d0, d1 - d0)?;
        Some(w[1] - q.scale((a + 1.0) / a))
    }))
}

/// Decay-exponent estimates `T_n` for `n = 0 ..= len - 4`. Invalid entries
/// are `None`.
pub fn estimate_decay<S: Scalar>(sample: &SequenceSample<S>, guard: &GuardPolicy) -> Result<Vec<Option<S>>> {
    require_len(sample, 4)?;
    let s = sample.values();
    Ok(s.windows(4)
        .map(|w| {
            let d = [w[1] - w[0], w[2] - w[1], w[3] - w[2]];
            let dd = [d[1] - d[0], d[2] - d[1]];
            let num = dd[0] * dd[1];
            let den = d[1] * dd[1] - d[2] * dd[0];
            Some(guard.divide(num, den)? - S::one())
        })
        .collect())
}

/// Median of the valid estimates in the last quarter of `estimates`.
pub fn median_tail(estimates: &[Option<f64>]) -> Option<f64> {
    if estimates.is_empty() {
        return None;
    }
    let start = estimates.len() - estimates.len().div_ceil(4);
    let mut tail: Vec<f64> = estimates[start..].iter().flatten().copied().collect();
    if tail.is_empty() {
        return None;
    }
    tail.sort_by(f64::total_cmp);
    let m = tail.len() / 2;
    Some(if tail.len() % 2 == 1 {
        tail[m]
    } else {
        0.5 * (tail[m - 1] + tail[m])
    })
}
