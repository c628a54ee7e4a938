use thiserror::Error;

/// Errors raised anywhere in the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("mixed discriminants {0} and {1} in one computation")]
    MixedDiscriminant(i64, i64),
    #[error("discriminant {0} is not a squarefree integer other than 0 and 1")]
    BadDiscriminant(i64),
    #[error("no canonical order on elements with negative discriminant {0}")]
    Unordered(i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("determinant requested over a noncommutative ring")]
    Noncommutative,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid literal `{0}`")]
    Literal(String),
    #[error("point {0} is not a member of the configuration")]
    NotInConfiguration(usize),
    #[error("duplicate element at index {0}")]
    Duplicate(usize),
    #[error("zero vector where a projective element was expected")]
    ZeroVector,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("no third hyperplane through the intersection of planes {0} and {1}")]
    NoThird(usize, usize),
    #[error("every simplex has infinite measure")]
    NoFiniteSimplex,
    #[error("no tie-free hyperplane at infinity found in {0} attempts")]
    RetryExhausted(usize),
    #[error("alpha({0},{1}) * alpha({1},{0}) is not 1")]
    NonUnit(usize, usize),
    #[error("labeling search failed: {0}")]
    SearchFailed(String),
    #[error("precondition failed for subset {0:?}")]
    PreconditionFailed(Vec<usize>),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
