//! Double-double scalar (about 32 significant digits).

use std::ops::{Add, Div, Mul, Neg, Sub};

use twofloat::TwoFloat;

use crate::scalar::Scalar;

/// Double-double number backed by `twofloat`. Division is done here by
/// residual correction: `TwoFloat / TwoFloat` in twofloat 0.8 returns only
/// a double-precision quotient.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct DoubleDouble(pub TwoFloat);

impl DoubleDouble {
    pub fn new(x: f64) -> Self {
        DoubleDouble(TwoFloat::from(x))
    }

    pub fn sqrt(self) -> Self {
        DoubleDouble(self.0.sqrt())
    }

    pub fn to_f64(self) -> f64 {
        f64::from(self.0)
    }

    /// High and low words.
    pub fn parts(self) -> (f64, f64) {
        (self.0.hi(), self.0.lo())
    }
}

impl From<f64> for DoubleDouble {
    fn from(x: f64) -> Self {
        DoubleDouble::new(x)
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        DoubleDouble(self.0 + rhs.0)
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        DoubleDouble(self.0 - rhs.0)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        DoubleDouble(self.0 * rhs.0)
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    fn neg(self) -> Self {
        DoubleDouble(-self.0)
    }
}

impl Div for DoubleDouble {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let (a, b) = (self.0, rhs.0);
        let q1 = a.hi() / b.hi();
        if !q1.is_finite() || q1 == 0.0 {
            return DoubleDouble(TwoFloat::from(q1));
        }
        let r = a - b * q1;
        let q2 = r.hi() / b.hi();
        let r = r - b * q2;
        let q3 = r.hi() / b.hi();
        DoubleDouble(TwoFloat::new_add(q1, q2) + q3)
    }
}

impl Scalar for DoubleDouble {
    fn zero() -> Self {
        DoubleDouble::new(0.0)
    }
    fn one() -> Self {
        DoubleDouble::new(1.0)
    }
    fn from_f64(x: f64) -> Self {
        DoubleDouble::new(x)
    }
    fn modulus(self) -> f64 {
        f64::from(self.0.abs())
    }
    fn is_finite(self) -> bool {
        self.0.hi().is_finite() && self.0.lo().is_finite()
    }
    fn epsilon() -> f64 {
        // 2^-104
        4.930_380_657_631_324e-32
    }
    fn max_digits() -> usize {
        32
    }
    fn scale(self, factor: f64) -> Self {
        DoubleDouble(self.0 * factor)
    }
}
