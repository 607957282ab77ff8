use thiserror::Error;

/// Errors raised by the exact-arithmetic and construction layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("mixed quadratic discriminants: sqrt({0}) and sqrt({1})")]
    MixedDiscriminant(u64, u64),
    #[error("square root of a negative number: {0}")]
    NegativeSqrt(String),
    #[error("invalid discriminant {0}: must be a square-free integer >= 2")]
    InvalidDiscriminant(u64),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("symplectic form is invalid: {0}")]
    InvalidForm(String),
    #[error("endomorphism is not infinitesimally symplectic")]
    NotInfSymplectic,
    #[error("bilinear form is not symmetric")]
    NotSymmetric,
    #[error("A^2 is not a scalar multiple of the identity")]
    NonScalarSquare,
    #[error("curvature tensor is not of Ricci type (W != 0)")]
    NotRicciType,
    #[error("invalid curvature tensor: {0}")]
    InvalidCurvature(String),
    #[error("invalid symmetric triple: {0}")]
    InvalidTriple(String),
    #[error("basis does not span an ideal: {0}")]
    NotAnIdeal(String),
    #[error("invalid model parameters: {0}")]
    InvalidParams(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
