use thiserror::Error;

/// Errors surfaced by the exact-arithmetic layers and the operations built
/// on top of them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Division by zero, including inversion of a zero-norm quadratic element.
    #[error("division by zero: {0}")]
    DivisionByZero(&'static str),

    /// Mixed arithmetic between quadratic extensions with different radicands.
    #[error("mismatched radicands: sqrt({lhs}) vs sqrt({rhs})")]
    MismatchedRadicands { lhs: String, rhs: String },

    /// A named precondition on an argument was violated.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Parameters hit a degenerate locus (a*b = -4, repeated characteristic
    /// roots) where the requested quantity is undefined.
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),

    /// Matrix inverse requested but the determinant is not a unit in the
    /// scalar ring.
    #[error("matrix is not invertible over its scalar ring")]
    NotInvertible,

    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),

    /// An internal cross-check that must hold by theorem failed; this is a
    /// defect, not a user error.
    #[error("internal consistency failure: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
