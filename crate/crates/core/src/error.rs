use thiserror::Error;

/// Failures raised by the transforms, oracles and containers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("input sequence is empty")]
    EmptyInput,
    #[error("not enough data: {0}")]
    InsufficientData(String),
    #[error("path parameter {value} exceeds table bound {bound}")]
    PathOutOfRange { value: usize, bound: usize },
    #[error("denominator vanished in a transformation step")]
    SingularStep,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("remainder estimate vanishes at n = {0}")]
    ZeroRemainderEstimate(usize),
    #[error("remainder estimate is singular at n = {0}")]
    SingularRemainderEstimate(usize),
    #[error("Pade system is singular for [{l}/{m}]")]
    DegeneratePade { l: usize, m: usize },
    #[error("model-sequence system is singular")]
    DegenerateModel,
    #[error("argument outside the domain: {0}")]
    OutOfDomain(String),
    #[error("partial sums disagree with terms at n = {0}")]
    InconsistentPartialSums(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
