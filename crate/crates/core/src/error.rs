use thiserror::Error;

/// Errors raised by body construction and geometric operations.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    /// A body failed one of its representation invariants.
    #[error("invalid body: invariant `{invariant}` violated: {detail}")]
    InvalidBody { invariant: &'static str, detail: String },

    /// A point or parameter lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested operation cannot be expressed in the body's representation.
    #[error("representation error: {0}")]
    Representation(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// An iterative solver did not reach its certificate.
    #[error("no convergence after {iterations} iterations (residual {residual:.3e})")]
    Convergence {
        iterations: usize,
        best: Vec<f64>,
        residual: f64,
    },

    /// The precondition of a proposition-style check is not met.
    #[error("precondition not met: {0}")]
    Precondition(String),

    /// A result contradicts a known theorem; signals a bug or an invalid body.
    #[error("internal error: {0}")]
    Internal(String),
}

impl GeomError {
    pub(crate) fn invalid(invariant: &'static str, detail: impl Into<String>) -> Self {
        GeomError::InvalidBody {
            invariant,
            detail: detail.into(),
        }
    }

    /// Name of the violated invariant, if this is a validation failure.
    pub fn invariant(&self) -> Option<&'static str> {
        match self {
            GeomError::InvalidBody { invariant, .. } => Some(invariant),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, GeomError>;
