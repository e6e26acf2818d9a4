use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error{}: {message}", if .location.is_empty() { String::new() } else { format!(" at {}", .location) })]
    Parse { location: String, message: String },

    #[error("subspace is not contained in the ambient space: {0}")]
    NotContained(String),

    #[error("subspace is not closed under multiplication: product of basis elements {0} and {1} leaves it")]
    NotClosed(usize, usize),

    #[error("not a unit: {0}")]
    NotUnit(String),

    #[error("not a central idempotent: {0}")]
    NotCentralIdempotent(String),

    #[error("left integral space has dimension {0}, expected 1")]
    IntegralDimension(usize),

    #[error("antipode is not invertible")]
    SingularAntipode,

    #[error("partial group action violates {axiom} at (g, h) = ({g}, {h}): {detail}")]
    GroupAction {
        axiom: String,
        g: usize,
        h: usize,
        detail: String,
    },

    #[error("invalid group: {0}")]
    Group(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("unknown catalog entry or parameter: {0}")]
    Catalog(String),
}
