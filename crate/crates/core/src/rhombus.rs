//! Shared machinery for the epsilon/rho/theta family: a table that carries
//! odd-order auxiliary columns, and the rhombus recursion
//! `e_{j+1}^(n) = e_{j-1}^(n+1) + c(j, n) / (e_j^(n+1) - e_j^(n))`.

use crate::guard::GuardPolicy;
use crate::scalar::Scalar;
use crate::table::TransformTable;

/// Table with auxiliary odd-order columns. Only the even raw columns
/// `2k` approximate the limit; they form the approximant table of order `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct EvenOrderTable<S> {
    raw: Vec<Vec<Option<S>>>,
    span: usize,
}

impl<S: Scalar> EvenOrderTable<S> {
    pub(crate) fn new(raw: Vec<Vec<Option<S>>>, span: usize) -> Self {
        EvenOrderTable { raw, span }
    }

    /// Raw entry with subscript `j` (odd subscripts are auxiliaries).
    pub fn raw(&self, j: usize, n: usize) -> Option<Option<S>> {
        self.raw.get(j)?.get(n).copied()
    }

    pub fn raw_columns(&self) -> usize {
        self.raw.len()
    }

    /// Approximant `e_{2k}^(n)`, if valid.
    pub fn approximant(&self, k: usize, n: usize) -> Option<S> {
        self.raw(2 * k, n).flatten()
    }

    /// Table of the even columns, re-indexed so that order `k` holds
    /// `e_{2k}^(n)`.
    pub fn approximants(&self) -> TransformTable<S> {
        let cols = self.raw.iter().step_by(2).map(|c| (0, c.clone())).collect();
        TransformTable::from_columns(cols, self.span)
    }
}

pub(crate) fn rhombus<S: Scalar>(
    input: &[S],
    numerator: impl Fn(usize, usize) -> f64,
    guard: &GuardPolicy,
) -> Vec<Vec<Option<S>>> {
    let mut cols: Vec<Vec<Option<S>>> = vec![input.iter().copied().map(Some).collect()];
    let mut prev: Vec<Option<S>> = vec![Some(S::zero()); input.len() + 1];
    for j in 0.. {
        let cur = &cols[j];
        if cur.len() < 2 {
            break;
        }
        let next: Vec<Option<S>> = (0..cur.len() - 1)
            .map(|n| {
                let (a, b, c) = (cur[n]?, cur[n + 1]?, prev[n + 1]?);
                let q = guard.divide(S::from_f64(numerator(j, n)), b - a)?;
                let v = c + q;
                v.is_finite().then_some(v)
            })
            .collect();
        prev = cols[j].clone();
        cols.push(next);
    }
    cols
}

/// Forward difference of two optional entries.
#[inline]
pub(crate) fn diff<S: Scalar>(col: &[Option<S>], n: usize) -> Option<S> {
    Some(col.get(n + 1).copied()?? - col.get(n).copied()??)
}

/// Second forward difference.
#[inline]
pub(crate) fn diff2<S: Scalar>(col: &[Option<S>], n: usize) -> Option<S> {
    Some(diff(col, n + 1)? - diff(col, n)?)
}
