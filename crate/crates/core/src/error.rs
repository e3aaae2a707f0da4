use thiserror::Error;

/// Crate-wide error type. Every fallible operation reports the precondition
/// it found violated; nothing in the decision paths panics on bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("variable index {var} out of range for {num_vars} variables")]
    VariableOutOfRange { var: usize, num_vars: usize },

    #[error("direction vector has a negative entry")]
    NegativeDirection,

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("negative value where a nonnegative one is required")]
    NegativeValue,

    #[error("expected a homogeneous polynomial of degree {expected}")]
    WrongDegree { expected: u32 },

    #[error("polynomial has a negative coefficient")]
    NegativeCoefficient,

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("polynomial is not positive at the given point")]
    NonPositiveAtPoint,

    #[error("parameter k = {k} is out of range: {reason}")]
    InvalidK { k: i64, reason: &'static str },

    #[error("epsilon is outside the admissible open interval")]
    EpsilonOutOfRange,

    #[error("input size {found} exceeds the supported limit {limit}")]
    SizeLimit { limit: usize, found: usize },

    #[error("matrix is not symmetric")]
    AsymmetricMatrix,

    #[error("gadget construction produced a negative coefficient; this is a bug")]
    ConstructionFailure,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),
}

pub type Result<T> = std::result::Result<T, Error>;
