use thiserror::Error;

/// Errors raised by algebra construction and the homological routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ill-formed quiver: {0}")]
    IllFormedQuiver(String),
    #[error("ill-formed relation: {0}")]
    IllFormedRelation(String),
    #[error("relations are not admissible within length cap {cap}")]
    NotAdmissible { cap: usize },
    #[error("empty quotient: the idempotent covers every vertex")]
    EmptyQuotient,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("decomposition failed after {0} attempts")]
    DecompositionFailed(usize),
    #[error("hypotheses fail: {0}")]
    HypothesesFail(String),
    #[error("algebra is not 1-Gorenstein: {0}")]
    NotOneGorenstein(String),
    #[error("incomplete enumeration (node budget {0} exceeded)")]
    IncompleteEnumeration(usize),
    #[error("malformed index {index}: pair has {len} summands")]
    MalformedIndex { index: usize, len: usize },
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("line {line}, column {col}: {message}")]
    Syntax { line: usize, col: usize, message: String },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
