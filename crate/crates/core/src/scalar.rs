use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

/// Field element the transforms operate on.
///
/// Implemented for `f64` and `Complex64`. An extended-precision type can be
/// plugged in by implementing this trait; nothing in the library assumes
/// more than field arithmetic and a modulus.
pub trait Scalar:
    Copy
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_f64(x: f64) -> Self;
    /// Absolute value (complex modulus).
    fn modulus(self) -> f64;
    fn is_finite(self) -> bool;
    /// Machine epsilon of the underlying real type.
    fn epsilon() -> f64;
    /// Number of significant decimal digits that round-trip.
    fn max_digits() -> usize;

    fn scale(self, factor: f64) -> Self {
        self * Self::from_f64(factor)
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_f64(x: f64) -> Self {
        x
    }
    fn modulus(self) -> f64 {
        self.abs()
    }
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
    fn epsilon() -> f64 {
        f64::EPSILON
    }
    fn max_digits() -> usize {
        17
    }
    fn scale(self, factor: f64) -> Self {
        self * factor
    }
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_f64(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    fn modulus(self) -> f64 {
        self.norm()
    }
    fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
    fn epsilon() -> f64 {
        f64::EPSILON
    }
    fn max_digits() -> usize {
        17
    }
    fn scale(self, factor: f64) -> Self {
        self * factor
    }
}

/// Relative distance `|a - b| / max(|a|, |b|, 1)`.
pub fn rel_diff<S: Scalar>(a: S, b: S) -> f64 {
    (a - b).modulus() / a.modulus().max(b.modulus()).max(1.0)
}
