use num_complex::Complex64;

use super::bernoulli::{bernoulli_tables, J_MAX};
use super::pochhammer;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Arguments accepted by [`euler_maclaurin_zeta`].
pub trait ZetaArgument: Scalar {
    fn real_part(self) -> f64;
    /// `base^self` for a positive real base.
    fn power_of(base: f64, exponent: Self) -> Self;
}

impl ZetaArgument for f64 {
    fn real_part(self) -> f64 {
        self
    }
    fn power_of(base: f64, exponent: Self) -> Self {
        base.powf(exponent)
    }
}

impl ZetaArgument for Complex64 {
    fn real_part(self) -> f64 {
        self.re
    }
    fn power_of(base: f64, exponent: Self) -> Self {
        (exponent * base.ln()).exp()
    }
}

/// Riemann zeta from the first `n + 1` Dirichlet terms plus the leading
/// `k` Euler–Maclaurin corrections of the truncation error. The remainder
/// integral is dropped.
pub fn euler_maclaurin_zeta<S: ZetaArgument>(z: S, n: usize, k: usize) -> Result<S> {
    if z.real_part() <= 1.0 {
        return Err(Error::OutOfDomain(format!("Re z = {} <= 1", z.real_part())));
    }
    if k > J_MAX {
        return Err(Error::InvalidParameter(format!("k = {k} exceeds {J_MAX}")));
    }
    let one = S::one();
    // sum small terms first
    let head = (0..=n)
        .rev()
        .fold(S::zero(), |acc, v| acc + S::power_of((v + 1) as f64, -z));
    let m = (n + 2) as f64;
    let mut tail = S::power_of(m, one - z) / (z - one) + S::power_of(m, -z).scale(0.5);
    let b = bernoulli_tables();
    let mut fact = 1.0; // (2j)!
    for j in 1..=k {
        fact *= ((2 * j - 1) * 2 * j) as f64;
        let coef = pochhammer(z, 2 * j - 1).scale(b.number(2 * j).unwrap() / fact);
        tail = tail + coef * S::power_of(m, -z - S::from_f64((2 * j - 1) as f64));
    }
    Ok(head + tail)
}
