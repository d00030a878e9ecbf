use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },

    #[error("universe mismatch: expected {expected} vertices, got {got}")]
    UniverseMismatch { expected: usize, got: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    #[error("graph is not bipartite (or carries a loop)")]
    NotBipartite,

    #[error("strategy has no shots")]
    EmptyStrategy,

    #[error("shot of size {got} exceeds the declared budget {budget}")]
    ShotOverBudget { got: usize, budget: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
