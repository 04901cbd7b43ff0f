use crate::scalar::Scalar;

/// Near-zero denominator detection shared by every recursion.
///
/// A denominator `d` trips the guard iff
/// `|d| < relative_threshold * max(1, |numerator|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GuardPolicy {
    relative_threshold: f64,
}

impl Default for GuardPolicy {
    fn default() -> Self {
        GuardPolicy {
            relative_threshold: 1e-14,
        }
    }
}

impl GuardPolicy {
    /// Returns `None` for negative or non-finite thresholds.
    pub fn new(relative_threshold: f64) -> Option<Self> {
        (relative_threshold >= 0.0 && relative_threshold.is_finite()).then_some(GuardPolicy { relative_threshold })
    }

    /// Policy that only rejects exact zeros and non-finite quotients.
    pub fn off() -> Self {
        GuardPolicy {
            relative_threshold: 0.0,
        }
    }

    pub fn relative_threshold(&self) -> f64 {
        self.relative_threshold
    }

    pub fn trips<S: Scalar>(&self, numerator: S, denominator: S) -> bool {
        let d = denominator.modulus();
        d == 0.0 || !d.is_finite() || d < self.relative_threshold * numerator.modulus().max(1.0)
    }

    /// Guarded quotient. `None` means the guard tripped or the result
    /// overflowed.
    pub fn divide<S: Scalar>(&self, numerator: S, denominator: S) -> Option<S> {
        if !numerator.is_finite() || self.trips(numerator, denominator) {
            return None;
        }
        let q = numerator / denominator;
        q.is_finite().then_some(q)
    }
}
