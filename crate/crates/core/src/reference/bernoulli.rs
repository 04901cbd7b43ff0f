use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// Largest `j` for which `B_{2j}` is tabulated.
pub const J_MAX: usize = 20;

/// Exact Bernoulli numbers `B_0 ... B_{2 J_MAX}` (with `B_1 = -1/2`).
#[derive(Debug)]
pub struct BernoulliTables {
    exact: Vec<BigRational>,
    float: Vec<f64>,
}

impl BernoulliTables {
    fn build() -> Self {
        let top = 2 * J_MAX;
        let mut exact: Vec<BigRational> = Vec::with_capacity(top + 1);
        exact.push(BigRational::from_integer(BigInt::from(1)));
        for m in 1..=top {
            // Σ_{j=0}^{m} C(m+1, j) B_j = 0
            let mut binom = BigInt::from(1);
            let mut acc = BigRational::zero();
            for (j, b) in exact.iter().enumerate() {
                acc += BigRational::from_integer(binom.clone()) * b;
                binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
            }
            exact.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
        }
        let float = exact.iter().map(|b| b.to_f64().unwrap_or(f64::NAN)).collect();
        BernoulliTables { exact, float }
    }

    pub fn exact(&self, m: usize) -> Option<&BigRational> {
        self.exact.get(m)
    }

    /// `B_m` as `f64`.
    pub fn number(&self, m: usize) -> Option<f64> {
        self.float.get(m).copied()
    }

    /// Bernoulli polynomial `B_m(x) = Σ_j C(m, j) B_j x^(m-j)`.
    pub fn polynomial(&self, m: usize, x: f64) -> Option<f64> {
        if m >= self.float.len() {
            return None;
        }
        let mut binom = 1.0;
        let mut acc = 0.0;
        for j in 0..=m {
            acc += binom * self.float[j] * x.powi((m - j) as i32);
            binom = binom * (m - j) as f64 / (j + 1) as f64;
        }
        Some(acc)
    }
}

/// Process-wide tables, built on first use.
pub fn bernoulli_tables() -> &'static BernoulliTables {
    static TABLES: OnceLock<BernoulliTables> = OnceLock::new();
    TABLES.get_or_init(BernoulliTables::build)
}
