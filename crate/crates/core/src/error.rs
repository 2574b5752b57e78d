use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex set spans an affine space of dimension {found}, expected {expected}")]
    DimensionDeficient { expected: usize, found: usize },
    #[error("vertices {0} and {1} coincide")]
    DuplicateVertex(usize, usize),
    #[error("need at least {needed} vertices, got {found}")]
    TooFewVertices { needed: usize, found: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("distance matrix is not realizable: {0}")]
    NotRealizable(String),
    #[error("Gram form is not positive definite")]
    NotPositiveDefinite,
    #[error("Gram form is not symmetric")]
    NotSymmetric,
    #[error("invalid distance matrix: {0}")]
    InvalidDistances(String),
    #[error("vertex {0} is not on the sphere through the other vertices")]
    NotCospherical(usize),
    #[error("subset is not an affine basis: {0}")]
    NotAffineBasis(String),
    #[error("subset has {found} vertices, expected {expected}")]
    WrongSize { expected: usize, found: usize },
    #[error("subset is affinely dependent")]
    AffinelyDependent,
    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(String),
    #[error("coefficients sum to {0}, expected 0")]
    SumNotZero(String),
    #[error("coefficients sum to {0}, expected 1")]
    SumNotOne(String),
    #[error("zero vector has no primitive form")]
    ZeroVector,
    #[error("empty input")]
    EmptyInput,
    #[error("vertex index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("parse error: {0}")]
    Parse(String),
}
