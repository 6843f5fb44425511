use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid edge ({0}, {1}): {2}")]
    InvalidEdge(VertexId, VertexId, &'static str),

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("instance too large: {what} is {actual}, limit is {limit}")]
    TooLarge {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("invalid bag {bag}: {reason}")]
    InvalidBag { bag: usize, reason: String },

    #[error("path decomposition has no bags")]
    EmptyDecomposition,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid layout: {0}")]
    InvalidLayout(String),

    #[error(
        "illegal {kind} action{}: {reason}",
        .step.map(|s| format!(" at step {}", s + 1)).unwrap_or_default()
    )]
    IllegalAction {
        /// 0-based position in the replayed strategy, when there is one.
        step: Option<usize>,
        kind: String,
        reason: String,
    },

    #[error("inconsistent bounds: lower {lower} exceeds upper {upper}")]
    InconsistentBounds { lower: usize, upper: usize },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("certificate is stale: expected graph hash {expected}, found {found}")]
    StaleCertificate { expected: String, found: String },

    #[error("malformed certificate: {0}")]
    Certificate(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
