use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Finite prefix `s_0 ... s_N` of a sequence, optionally with the series
/// terms that produced it and a known limit.
#[derive(Debug, Clone, PartialEq)]
pub struct SequenceSample<S> {
    values: Vec<S>,
    terms: Option<Vec<S>>,
    limit: Option<S>,
    start_offset: usize,
}

/// Relative tolerance for the partial-sum consistency check.
const CONSISTENCY_TOL: f64 = 1e-9;

impl<S: Scalar> SequenceSample<S> {
    pub fn from_values(values: Vec<S>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(SequenceSample {
            values,
            terms: None,
            limit: None,
            start_offset: 0,
        })
    }

    /// Builds a sample from both partial sums and terms, checking
    /// `values[n] - values[n-1] == terms[n]` up to rounding.
    pub fn from_values_and_terms(values: Vec<S>, terms: Vec<S>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyInput);
        }
        if terms.len() != values.len() {
            return Err(Error::InvalidParameter(format!(
                "{} terms for {} partial sums",
                terms.len(),
                values.len()
            )));
        }
        check_consistency(&values, &terms)?;
        Ok(SequenceSample {
            values,
            terms: Some(terms),
            limit: None,
            start_offset: 0,
        })
    }

    pub fn with_limit(mut self, limit: S) -> Self {
        self.limit = Some(limit);
        self
    }

    pub fn with_start_offset(mut self, offset: usize) -> Result<Self> {
        if offset >= self.values.len() {
            return Err(Error::InvalidParameter(format!(
                "start offset {offset} leaves no elements of {}",
                self.values.len()
            )));
        }
        self.start_offset = offset;
        Ok(self)
    }

    /// All stored partial sums, ignoring the start offset.
    pub fn raw_values(&self) -> &[S] {
        &self.values
    }

    /// Partial sums the transforms see: `s_{offset}, s_{offset+1}, ...`.
    pub fn values(&self) -> &[S] {
        &self.values[self.start_offset..]
    }

    pub fn terms(&self) -> Option<&[S]> {
        self.terms.as_deref().map(|t| &t[self.start_offset..])
    }

    pub fn limit(&self) -> Option<S> {
        self.limit
    }

    pub fn start_offset(&self) -> usize {
        self.start_offset
    }

    /// Number of elements visible to transforms.
    pub fn len(&self) -> usize {
        self.values.len() - self.start_offset
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `s_{n+1} - s_n` for the visible sequence, taken from the stored terms
    /// when available.
    pub fn forward_difference(&self, n: usize) -> Option<S> {
        let v = self.values();
        if n + 1 >= v.len() {
            return None;
        }
        match self.terms() {
            Some(t) => Some(t[n + 1]),
            None => Some(v[n + 1] - v[n]),
        }
    }

    /// Equivalent sample with the offset folded away.
    pub fn truncated(&self) -> Self {
        SequenceSample {
            values: self.values().to_vec(),
            terms: self.terms().map(<[S]>::to_vec),
            limit: self.limit,
            start_offset: 0,
        }
    }
}

fn check_consistency<S: Scalar>(values: &[S], terms: &[S]) -> Result<()> {
    let ok = |a: S, b: S, scale: f64| (a - b).modulus() <= CONSISTENCY_TOL * scale.max(1.0);
    if !ok(values[0], terms[0], values[0].modulus()) {
        return Err(Error::InconsistentPartialSums(0));
    }
    for n in 1..values.len() {
        let scale = values[n].modulus().max(values[n - 1].modulus());
        if !ok(values[n] - values[n - 1], terms[n], scale) {
            return Err(Error::InconsistentPartialSums(n));
        }
    }
    Ok(())
}

/// Partial sums `s_n = a_0 + ... + a_n`.
pub fn make_partial_sums<S: Scalar>(terms: &[S]) -> Result<SequenceSample<S>> {
    if terms.is_empty() {
        return Err(Error::EmptyInput);
    }
    let values = terms
        .iter()
        .scan(S::zero(), |acc, &a| {
            *acc = *acc + a;
            Some(*acc)
        })
        .collect();
    Ok(SequenceSample {
        values,
        terms: Some(terms.to_vec()),
        limit: None,
        start_offset: 0,
    })
}

/// Result of the ratio test on the remainders.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Convergence<S> {
    Linear(S),
    Logarithmic,
    Undetermined,
}

/// Spread allowed among the trailing ratios, and the distance from one that
/// separates linear from logarithmic convergence.
pub const CLASSIFY_TOL: f64 = 0.05;

/// Classifies by `(s_{n+1} - s) / (s_n - s)`. Without a known limit the
/// ratio of consecutive differences `Δs_{n+1} / Δs_n` is used, which has the
/// same limit. Ratios whose denominator is at rounding level are skipped.
pub fn classify_convergence<S: Scalar>(sample: &SequenceSample<S>) -> Result<Convergence<S>> {
    let v = sample.values();
    let scale = v.iter().map(|x| x.modulus()).fold(0.0, f64::max);
    let noise = 64.0 * S::epsilon() * scale;
    let remainders: Vec<S> = match sample.limit() {
        Some(s) => v.iter().map(|&x| x - s).collect(),
        None => v.windows(2).map(|w| w[1] - w[0]).collect(),
    };
    let ratios: Vec<S> = remainders
        .windows(2)
        .filter(|w| w[0].modulus() > noise && w[1].modulus() > noise)
        .map(|w| w[1] / w[0])
        .filter(|r| r.is_finite())
        .collect();
    if ratios.len() < 4 {
        return Err(Error::InsufficientData(format!(
            "{} usable remainder ratios, need 4",
            ratios.len()
        )));
    }
    let tail = &ratios[ratios.len() - 3..];
    let latest = tail[2];
    let spread = tail
        .iter()
        .flat_map(|a| tail.iter().map(move |b| (*a - *b).modulus()))
        .fold(0.0, f64::max);
    if spread > CLASSIFY_TOL {
        return Ok(Convergence::Undetermined);
    }
    if (latest - S::one()).modulus() <= CLASSIFY_TOL {
        Ok(Convergence::Logarithmic)
    } else if latest.modulus() < 1.0 - CLASSIFY_TOL {
        Ok(Convergence::Linear(latest))
    } else {
        Ok(Convergence::Undetermined)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn alternating_harmonic_partial_sums() {
        let s = make_partial_sums(&[1.0, -0.5, 1.0 / 3.0]).unwrap();
        assert_eq!(s.values()[0], 1.0);
        assert_eq!(s.values()[1], 0.5);
        assert_relative_eq!(s.values()[2], 0.833_333_333_333_333_3, epsilon = 1e-15);
        assert!(s.limit().is_none());
    }

    #[test]
    fn zero_terms() {
        let s = make_partial_sums(&[0.0, 0.0, 0.0]).unwrap();
        assert_eq!(s.values(), &[0.0, 0.0, 0.0]);
    }

    #[test]
    fn inverse_squares() {
        let terms: Vec<f64> = (0..4).map(|v| 1.0 / ((v + 1) as f64).powi(2)).collect();
        let s = make_partial_sums(&terms).unwrap();
        let expected = [1.0, 1.25, 1.361_111_111_111_111, 1.423_611_111_111_111];
        for (a, b) in s.values().iter().zip(expected) {
            assert_relative_eq!(*a, b, epsilon = 1e-14);
        }
    }

    #[test]
    fn empty_terms_rejected() {
        assert_eq!(make_partial_sums::<f64>(&[]), Err(Error::EmptyInput));
        assert_eq!(SequenceSample::<f64>::from_values(vec![]), Err(Error::EmptyInput));
    }

    #[test]
    fn inconsistent_terms_rejected() {
        let err = SequenceSample::from_values_and_terms(vec![1.0, 2.0, 3.5], vec![1.0, 1.0, 1.0]);
        assert_eq!(err, Err(Error::InconsistentPartialSums(2)));
    }

    #[test]
    fn offset_shifts_view() {
        let s = make_partial_sums(&[1.0, 2.0, 3.0, 4.0])
            .unwrap()
            .with_start_offset(2)
            .unwrap();
        assert_eq!(s.values(), &[6.0, 10.0]);
        assert_eq!(s.terms().unwrap(), &[3.0, 4.0]);
        assert_eq!(s.forward_difference(0), Some(4.0));
        assert!(s.clone().with_start_offset(4).is_err());
        assert_eq!(s.truncated().values(), s.values());
    }

    #[test]
    fn classify_geometric_is_linear() {
        let v: Vec<f64> = (0..12).map(|n| 1.0 + 0.5f64.powi(n)).collect();
        let s = SequenceSample::from_values(v).unwrap().with_limit(1.0);
        match classify_convergence(&s).unwrap() {
            Convergence::Linear(r) => assert_relative_eq!(r, 0.5, epsilon = 1e-12),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn classify_inverse_squares_is_logarithmic() {
        let terms: Vec<f64> = (0..80).map(|v| 1.0 / ((v + 1) as f64).powi(2)).collect();
        let limit = std::f64::consts::PI.powi(2) / 6.0;
        let s = make_partial_sums(&terms).unwrap().with_limit(limit);
        assert_eq!(classify_convergence(&s).unwrap(), Convergence::Logarithmic);
    }

    #[test]
    fn classify_without_limit_uses_last_value() {
        let v: Vec<f64> = (0..30).map(|n| 2.0 + 0.3f64.powi(n)).collect();
        let s = SequenceSample::from_values(v).unwrap();
        assert!(matches!(classify_convergence(&s).unwrap(), Convergence::Linear(_)));
    }

    #[test]
    fn classify_needs_data() {
        let s = SequenceSample::from_values(vec![1.0, 0.5, 0.25])
            .unwrap()
            .with_limit(0.0);
        assert!(matches!(classify_convergence(&s), Err(Error::InsufficientData(_))));
    }
}
