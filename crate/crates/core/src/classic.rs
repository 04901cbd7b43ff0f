//! Aitken's Δ² process and its iteration, Wynn's epsilon algorithm,
//! Brezinski's theta algorithm and the iterated theta transformation 𝒥.

use crate::error::{Error, Result};
use crate::guard::GuardPolicy;
use crate::rhombus::{diff, diff2, rhombus, EvenOrderTable};
use crate::sample::SequenceSample;
use crate::scalar::Scalar;
use crate::table::TransformTable;

/// Epsilon table: raw subscripts `j`, approximants at even `j = 2k`.
pub type EpsilonTable<S> = EvenOrderTable<S>;
/// Theta table: raw subscripts `j`, approximants at even `j = 2k`.
pub type ThetaTable<S> = EvenOrderTable<S>;

/// `s_n - (Δs_n)² / Δ²s_n`.
pub fn aitken_step<S: Scalar>(s0: S, s1: S, s2: S, guard: &GuardPolicy) -> Result<S> {
    aitken(&[s0, s1, s2], guard).ok_or(Error::SingularStep)
}

fn aitken<S: Scalar>(w: &[S], guard: &GuardPolicy) -> Option<S> {
    let d0 = w[1] - w[0];
    let d2 = w[2] - w[1] - d0;
    Some(w[0] - guard.divide(d0 * d0, d2)?)
}

/// Closed form of `ϑ_2^(n)` from `s_n, ..., s_{n+3}`.
pub fn theta2_closed_form<S: Scalar>(w: [S; 4], guard: &GuardPolicy) -> Result<S> {
    theta2(&w, guard).ok_or(Error::SingularStep)
}

fn theta2<S: Scalar>(w: &[S], guard: &GuardPolicy) -> Option<S> {
    let d = [w[1] - w[0], w[2] - w[1], w[3] - w[2]];
    let dd = [d[1] - d[0], d[2] - d[1]];
    let num = d[0] * d[1] * dd[1];
    let den = d[2] * dd[0] - d[0] * dd[1];
    Some(w[1] - guard.divide(num, den)?)
}

/// Repeatedly applies a `width`-point map to the previous column. Windows
/// touching an invalid entry stay invalid.
pub(crate) fn iterate_window<S: Scalar>(
    input: &[S],
    width: usize,
    span: usize,
    step: impl Fn(usize, usize, &[S]) -> Option<S>,
) -> TransformTable<S> {
    let mut table = TransformTable::new(input, span);
    let mut prev: Vec<Option<S>> = input.iter().copied().map(Some).collect();
    let mut k = 0;
    let mut buf = Vec::with_capacity(width);
    while prev.len() >= width {
        let next: Vec<Option<S>> = prev
            .windows(width)
            .enumerate()
            .map(|(n, w)| {
                buf.clear();
                for v in w {
                    buf.push((*v)?);
                }
                step(k, n, &buf).filter(|v| v.is_finite())
            })
            .collect();
        table.push_column(0, next.clone());
        prev = next;
        k += 1;
    }
    table
}

/// Iterated Δ² process `𝒜_k^(n)`.
pub fn iterated_aitken<S: Scalar>(sample: &SequenceSample<S>, guard: &GuardPolicy) -> Result<TransformTable<S>> {
    require_len(sample, 3)?;
    Ok(iterate_window(sample.values(), 3, 2, |_, _, w| aitken(w, guard)))
}

/// Wynn's epsilon algorithm.
pub fn wynn_epsilon<S: Scalar>(sample: &SequenceSample<S>, guard: &GuardPolicy) -> Result<EpsilonTable<S>> {
    require_len(sample, 1)?;
    Ok(epsilon_on(sample.values(), guard))
}

pub(crate) fn epsilon_on<S: Scalar>(values: &[S], guard: &GuardPolicy) -> EpsilonTable<S> {
    EvenOrderTable::new(rhombus(values, |_, _| 1.0, guard), 2)
}

/// Brezinski's theta algorithm.
pub fn brezinski_theta<S: Scalar>(sample: &SequenceSample<S>, guard: &GuardPolicy) -> Result<ThetaTable<S>> {
    require_len(sample, 1)?;
    let s = sample.values();
    let mut raw: Vec<Vec<Option<S>>> = vec![s.iter().copied().map(Some).collect()];
    let mut before: Vec<Option<S>> = vec![Some(S::zero()); s.len() + 1];
    loop {
        let even = raw.last().unwrap().clone();
        if even.len() < 2 {
            break;
        }
        // ϑ_{2k+1}^(n) = ϑ_{2k-1}^(n+1) + 1 / Δϑ_{2k}^(n)
        let odd: Vec<Option<S>> = (0..even.len() - 1)
            .map(|n| {
                let q = guard.divide(S::one(), diff(&even, n)?)?;
                Some(before[n + 1]? + q).filter(|v| v.is_finite())
            })
            .collect();
        raw.push(odd.clone());
        if odd.len() < 3 {
            break;
        }
        // ϑ_{2k+2}^(n) = ϑ_{2k}^(n+1) + Δϑ_{2k}^(n+1) Δϑ_{2k+1}^(n+1) / Δ²ϑ_{2k+1}^(n)
        let next: Vec<Option<S>> = (0..odd.len() - 2)
            .map(|n| {
                let num = diff(&even, n + 1)? * diff(&odd, n + 1)?;
                let q = guard.divide(num, diff2(&odd, n)?)?;
                Some(even[n + 1]? + q).filter(|v| v.is_finite())
            })
            .collect();
        raw.push(next);
        before = odd;
    }
    Ok(EvenOrderTable::new(raw, 3))
}

/// Iterated theta transformation `𝒥_k^(n)`, built by iterating the closed
/// form of `ϑ_2`.
pub fn iterated_theta<S: Scalar>(sample: &SequenceSample<S>, guard: &GuardPolicy) -> Result<TransformTable<S>> {
    require_len(sample, 4)?;
    Ok(iterate_window(sample.values(), 4, 3, |_, _, w| theta2(w, guard)))
}

pub(crate) fn require_len<S: Scalar>(sample: &SequenceSample<S>, n: usize) -> Result<()> {
    if sample.len() < n {
        Err(Error::InsufficientData(format!(
            "{} elements, need at least {n}",
            sample.len()
        )))
    } else {
        Ok(())
    }
}
