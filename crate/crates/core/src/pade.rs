//! Padé approximants: a direct linear-system construction and the
//! epsilon-algorithm route `ε_{2k}^(n) = [n+k / k]`.

use crate::classic::{epsilon_on, EpsilonTable};
use crate::error::{Error, Result};
use crate::guard::GuardPolicy;
use crate::linalg::solve;
use crate::scalar::Scalar;
use crate::table::{PathSpec, TransformTable};

/// Pivot threshold relative to the largest matrix entry.
pub const PADE_PIVOT_TOL: f64 = 1e-13;

/// Power series coefficients `γ_0 ... γ_N` and an evaluation point.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries<S> {
    coefficients: Vec<S>,
    z: S,
}

impl<S: Scalar> PowerSeries<S> {
    pub fn new(coefficients: Vec<S>, z: S) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(PowerSeries { coefficients, z })
    }

    pub fn coefficients(&self) -> &[S] {
        &self.coefficients
    }

    pub fn z(&self) -> S {
        self.z
    }

    /// Partial sums `f_n(z) = Σ_{k≤n} γ_k z^k`.
    pub fn partial_sums(&self) -> Vec<S> {
        let mut pow = S::one();
        let mut acc = S::zero();
        self.coefficients
            .iter()
            .map(|&g| {
                acc = acc + g * pow;
                pow = pow * self.z;
                acc
            })
            .collect()
    }

    fn coef(&self, i: isize) -> S {
        if i < 0 {
            S::zero()
        } else {
            self.coefficients.get(i as usize).copied().unwrap_or(S::zero())
        }
    }
}

/// `[l/m] = P_l / Q_m` with `q_0 = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PadeApproximant<S> {
    pub l: usize,
    pub m: usize,
    pub numerator: Vec<S>,
    pub denominator: Vec<S>,
}

fn horner<S: Scalar>(c: &[S], z: S) -> S {
    c.iter().rev().fold(S::zero(), |acc, &v| acc * z + v)
}

impl<S: Scalar> PadeApproximant<S> {
    pub fn eval(&self, z: S) -> Option<S> {
        let v = horner(&self.numerator, z) / horner(&self.denominator, z);
        v.is_finite().then_some(v)
    }

    /// Largest coefficient magnitude of `Q_m f - P_l` through order `l + m`.
    pub fn order_residual(&self, coefficients: &[S]) -> f64 {
        (0..=self.l + self.m)
            .map(|i| {
                let qf = (0..=self.m.min(i)).fold(S::zero(), |acc, j| {
                    acc + self.denominator[j] * coefficients.get(i - j).copied().unwrap_or(S::zero())
                });
                let p = self.numerator.get(i).copied().unwrap_or(S::zero());
                (qf - p).modulus()
            })
            .fold(0.0, f64::max)
    }
}

/// Solves the order conditions for `[l/m]` directly.
pub fn pade_direct<S: Scalar>(series: &PowerSeries<S>, l: usize, m: usize) -> Result<PadeApproximant<S>> {
    if l + m >= series.coefficients.len() {
        return Err(Error::InsufficientData(format!(
            "[{l}/{m}] needs {} coefficients, have {}",
            l + m + 1,
            series.coefficients.len()
        )));
    }
    let mut q = vec![S::one()];
    if m > 0 {
        // Σ_{j=1}^{m} γ_{l+i-j} q_j = -γ_{l+i},  i = 1..m
        let a = (1..=m)
            .map(|i| (1..=m).map(|j| series.coef((l + i) as isize - j as isize)).collect())
            .collect();
        let b = (1..=m).map(|i| -series.coef((l + i) as isize)).collect();
        q.extend(solve(a, b, PADE_PIVOT_TOL).ok_or(Error::DegeneratePade { l, m })?);
    }
    let p = (0..=l)
        .map(|i| (0..=m.min(i)).fold(S::zero(), |acc, j| acc + q[j] * series.coef((i - j) as isize)))
        .collect();
    Ok(PadeApproximant {
        l,
        m,
        numerator: p,
        denominator: q,
    })
}

/// Epsilon table of the partial sums, read as Padé approximants.
#[derive(Debug, Clone, PartialEq)]
pub struct PadeTable<S> {
    epsilon: EpsilonTable<S>,
}

impl<S: Scalar> PadeTable<S> {
    pub fn epsilon(&self) -> &EpsilonTable<S> {
        &self.epsilon
    }

    /// Padé degrees of approximant `ε_{2k}^(n)`.
    pub fn label(k: usize, n: usize) -> (usize, usize) {
        (n + k, k)
    }

    /// `[l/m](z)` for `l >= m`, if computed and valid.
    pub fn value(&self, l: usize, m: usize) -> Option<S> {
        if l < m {
            return None;
        }
        self.epsilon.approximant(m, l - m)
    }

    pub fn approximants(&self) -> TransformTable<S> {
        self.epsilon.approximants()
    }
}

pub fn pade_via_epsilon<S: Scalar>(series: &PowerSeries<S>, guard: &GuardPolicy) -> PadeTable<S> {
    PadeTable {
        epsilon: epsilon_on(&series.partial_sums(), guard),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StaircaseEntry<S> {
    pub l: usize,
    pub m: usize,
    /// `None` marks an invalid epsilon entry.
    pub value: Option<S>,
}

/// `[0/0], [1/0], [1/1], [2/1], ...` drawn from the epsilon table.
pub fn staircase_sequence<S: Scalar>(series: &PowerSeries<S>, guard: &GuardPolicy) -> Vec<StaircaseEntry<S>> {
    let table = pade_via_epsilon(series, guard).approximants();
    table
        .path_cells(PathSpec::Staircase)
        .expect("staircase is always in range")
        .into_iter()
        .map(|c| {
            let (l, m) = PadeTable::<S>::label(c.k, c.n);
            StaircaseEntry { l, m, value: c.value }
        })
        .collect()
}
