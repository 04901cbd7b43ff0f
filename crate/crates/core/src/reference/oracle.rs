use crate::error::{Error, Result};
use crate::linalg::solve;
use crate::scalar::Scalar;

const ORACLE_PIVOT_TOL: f64 = 1e-13;

/// Limit of the model `s_{n+i} = s + Σ_j c_j φ_j(n+i)` fitted exactly to
/// `k + 1` samples. `phis[i][j]` holds `φ_j(n+i)`.
pub fn e_oracle<S: Scalar>(samples: &[S], phis: &[Vec<S>]) -> Result<S> {
    let rows = samples.len();
    if rows == 0 {
        return Err(Error::EmptyInput);
    }
    if phis.len() != rows || phis.iter().any(|r| r.len() + 1 != rows) {
        return Err(Error::InvalidParameter(format!(
            "need {rows} rows of {} basis values",
            rows - 1
        )));
    }
    let a = phis
        .iter()
        .map(|r| std::iter::once(S::one()).chain(r.iter().copied()).collect())
        .collect();
    let x = solve(a, samples.to_vec(), ORACLE_PIVOT_TOL).ok_or(Error::DegenerateModel)?;
    Ok(x[0])
}
