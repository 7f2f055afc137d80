use thiserror::Error;

use crate::poly::MultiIndex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("multi-index {alpha} has length {found}, expected {expected}")]
    LengthMismatch {
        alpha: MultiIndex,
        expected: u32,
        found: u32,
    },

    #[error("forms live in {left} and {right} variables")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("expected a vector of dimension {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not symmetric at ({row}, {col})")]
    Asymmetric { row: usize, col: usize },

    #[error("coefficient matrix at {alpha} is not symmetric")]
    AsymmetricCoefficient { alpha: MultiIndex },

    #[error("coefficient key {alpha} has length {found} but the form has degree {degree}")]
    MixedDegree {
        alpha: MultiIndex,
        degree: u32,
        found: u32,
    },

    #[error("coefficient at {alpha} is {found}x{found}, expected {expected}x{expected}")]
    SizeMismatch {
        alpha: MultiIndex,
        expected: usize,
        found: usize,
    },

    #[error("matrix size must be positive")]
    EmptyMatrix,

    #[error("number of variables must be positive")]
    NoVariables,

    #[error("point is not on the standard simplex")]
    OffSimplex,

    #[error("direction vector must be nonzero")]
    ZeroDirection,

    #[error("certificate degree {found} does not match form degree plus m = {expected}")]
    CertificateDegree { expected: u32, found: u32 },

    #[error("certificate carries {found} witnesses, expected {expected}")]
    WitnessCount { expected: usize, found: usize },

    #[error("matrix is not positive definite at a grid point of depth {depth}")]
    CounterexampleAtDepth { depth: u32 },

    #[error("grid depth must be positive")]
    ZeroDepth,

    #[error("{path}: {message}")]
    Parse { path: String, message: String },
}

impl Error {
    pub(crate) fn parse(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            message: message.into(),
        }
    }
}
