use thiserror::Error;

/// Errors produced by the library.
///
/// Axiom failures are never errors: they are reported as failing checks in a
/// [`Report`](crate::report::Report). Errors signal malformed input, unmet
/// preconditions, or internal inconsistencies.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("conductors {0} and {1} have no common embedding")]
    ConductorMismatch(u32, u32),

    #[error("cannot parse scalar literal {literal:?}: {reason}")]
    ScalarLiteral { literal: String, reason: String },

    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: String, found: String },

    #[error("leg {leg} out of range for arity {arity}")]
    LegOutOfRange { leg: usize, arity: usize },

    #[error("map is not invertible (kernel dimension {kernel_dim})")]
    NotInvertible { kernel_dim: usize },

    #[error("element is not a unit")]
    NotAUnit,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("unsupported instance: {0}")]
    Unsupported(String),

    #[error("malformed input at line {line}: {reason}")]
    Format { line: usize, reason: String },

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn shape(expected: impl std::fmt::Debug, found: impl std::fmt::Debug) -> Self {
        Error::ShapeMismatch {
            expected: format!("{expected:?}"),
            found: format!("{found:?}"),
        }
    }
}
