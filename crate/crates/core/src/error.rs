use thiserror::Error;

use crate::arith::Rat;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero vector has no primitive form")]
    ZeroVector,
    #[error("not submodular: violated at S={set:#b}, y={y}, z={z}")]
    NotSubmodular { set: u32, y: usize, z: usize },
    #[error("ground set too large: n = {n} exceeds the limit {limit}")]
    GroundSetTooLarge { n: usize, limit: usize },
    #[error("not a deformed permutahedron")]
    NotDeformedPermutahedron,
    #[error("unequal coordinate sums")]
    UnequalCoordinateSums,
    #[error("point polytope")]
    PointPolytope,
    #[error("not an indecomposable non-point: {0}")]
    NotIndecomposable(String),
    #[error("lies in lineality")]
    LiesInLineality,
    #[error("ground set mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("negative dilation factor {0}")]
    NegativeDilation(Rat),
    #[error("invalid triple: {0}")]
    InvalidTriple(String),
    #[error("quotient violated (σ, i) = ({sigma:?}, {coord})")]
    QuotientViolated { sigma: Vec<usize>, coord: usize },
    #[error("no seed")]
    NoSeed,
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("guard exceeded: {0}")]
    Guard(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code for this error: 2 for bad input, 3 for guard
    /// violations, 1 for negative verdicts.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::NotIndecomposable(_) | Error::Io(_) | Error::Json(_) | Error::DimensionMismatch(..) => 2,
            Error::Guard(_) | Error::GroundSetTooLarge { .. } => 3,
            _ => 1,
        }
    }
}
