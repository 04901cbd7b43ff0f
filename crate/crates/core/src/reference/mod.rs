//! Independent oracles and the canonical problem corpus.

mod bernoulli;
mod oracle;
mod problems;
mod quadrature;
mod zeta;

pub use bernoulli::{bernoulli_tables, BernoulliTables, J_MAX};
pub use oracle::e_oracle;
pub use problems::{generate_problem, NamedFunction, ProblemFamily, ProblemSpec};
pub use quadrature::{euler_series_value, integrate_adaptive};
pub use zeta::{euler_maclaurin_zeta, ZetaArgument};

use crate::scalar::Scalar;

/// Rising factorial `(z)_m = z (z+1) ... (z+m-1)`.
pub fn pochhammer<S: Scalar>(z: S, m: usize) -> S {
    (0..m).fold(S::one(), |acc, i| acc * (z + S::from_f64(i as f64)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(3.0, 0), 1.0);
        assert_eq!(pochhammer(2.0, 3), 24.0);
        assert_eq!(pochhammer(0.5, 2), 0.75);
    }
}
