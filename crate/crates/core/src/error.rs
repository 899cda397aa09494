use thiserror::Error;

/// Errors raised by the algebraic operations and verifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("element has vector factors; a pure covector was expected")]
    NotPureCovector,
    #[error("shape error: {0}")]
    ShapeError(String),
    #[error("not a hom-Lie algebra: {0}")]
    NotHomLie(String),
    #[error("not a representation: {0}")]
    NotRepresentation(String),
    #[error("Ad_alpha invariance violated: {0}")]
    AdAlphaViolation(String),
    #[error("not a hom-Nijenhuis operator: {0}")]
    NotNijenhuis(String),
    #[error("not a hom-O-operator: {0}")]
    NotOOperator(String),
    #[error("not a hom-right-symmetric algebra: {0}")]
    NotRightSymmetric(String),
    #[error("not an automorphism of the bracket: {0}")]
    NotAutomorphism(String),
    #[error("construction failed: {0}")]
    ConstructionFailure(String),
    #[error("parse error: {0}")]
    ParseError(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Whether the error reports a violated precondition (as opposed to a
    /// malformed input).
    pub fn is_precondition(&self) -> bool {
        !matches!(self, Error::ParseError(_) | Error::UnknownSuite(_))
    }
}
