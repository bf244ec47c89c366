use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid intersection array: {0}")]
    InvalidArray(String),
    #[error("valency k_{index} is not a positive integer")]
    NonIntegralValency { index: usize },
    #[error("arithmetic overflow while deriving parameters")]
    Overflow,
    #[error("eigensolver did not converge")]
    NumericalFailure,
    #[error("{0} is not an eigenvalue of the intersection matrix")]
    NotAnEigenvalue(String),
    #[error("multiplicity {value} of eigenvalue {theta} is not a positive integer")]
    NonIntegralMultiplicity { theta: String, value: f64 },
    #[error("operation requires diameter 3, got {0}")]
    WrongDiameter(usize),
    #[error("theta = k must use the valency form")]
    TrivialEigenvalue,
    #[error("array is not antipodal")]
    NotAntipodal,
    #[error("array is not bipartite")]
    NotBipartite,
    #[error("cover index must be 2, got {0}")]
    WrongCoverIndex(u64),
    #[error("hypothesis b_i = c_(D-i) fails at i = {0}")]
    HypothesisFailed(usize),
    #[error("q = {0} lies in (-1, 0]")]
    InvalidQRegion(String),
    #[error("b = {0} is not 0 or 1 mod 4")]
    InfeasibleB(u64),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("graph is disconnected")]
    DisconnectedInput,
    #[error("q must be nonzero")]
    ZeroQ,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
