use thiserror::Error;

/// Errors raised by the library and the request runner.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is not tame: the top weighted-homogeneous part has a non-isolated singularity")]
    NotTame,

    #[error("bad weights: {0}")]
    BadWeights(String),

    #[error("validation failed: {0}")]
    ValidationFailed(String),

    #[error("exponent vector has {found} entries, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("zero input: {0}")]
    ZeroInput(String),

    #[error("operation needs n >= 1 but the polynomial has a single variable")]
    OneVariable,

    #[error("working degree {degree} exceeds the configured cap {cap}")]
    DegreeLimit { degree: u64, cap: u64 },

    #[error("zero pivot at ({row}, {col})")]
    ZeroPivot { row: usize, col: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("the computed basis is singular")]
    SingularBasis,

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown variable `{name}` at line {line}, column {column}")]
    UnknownVariable {
        name: String,
        line: usize,
        column: usize,
    },

    #[error("`t` is reserved for the parameter of the Brieskorn module and cannot be a variable")]
    ReservedVariable,

    #[error("bad request: {0}")]
    BadRequest(String),
}

pub type Result<T> = std::result::Result<T, Error>;
