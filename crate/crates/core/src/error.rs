use thiserror::Error;

/// Errors raised by the quiver toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("duplicate vertex identifier `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("dimension vector has {found} entries, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("integer overflow while evaluating the Euler form")]
    Overflow,
    #[error("{step} is not applicable at vertex `{vertex}`")]
    NotApplicable { step: &'static str, vertex: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("local quiver would need {count} arrows from factor {from} to factor {to}")]
    NegativeArrowCount { from: usize, to: usize, count: i64 },
    #[error("arrows {0:?} do not form a closed cycle")]
    NotACycle(Vec<usize>),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("gauge block at vertex `{0}` is singular or too badly conditioned")]
    SingularGauge(String),
    #[error("no generator cycles within the length bound for a setting that has cycles")]
    EmptyGeneratorSet,
}

pub type Result<T, E = QuiverError> = std::result::Result<T, E>;
