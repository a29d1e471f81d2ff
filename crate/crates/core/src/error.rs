use thiserror::Error;

use crate::types::{Edge, VertexId};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),

    #[error("vertex {vertex} outside [1, {n}]")]
    VertexOutOfRange { vertex: u32, n: u32 },

    #[error("invalid stream at update {at}: {reason}")]
    InvalidStream { at: u64, reason: String },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("promise violated at update {at}: matching grew beyond k")]
    PromiseViolation { at: u64 },

    #[error("sketch of vertex {vertex} failed to recover its support")]
    SketchFail { vertex: VertexId },

    #[error("no exposed vertex among the samples drawn for vertex {vertex}")]
    RematchMiss { vertex: VertexId },

    #[error("sparse recovery failed")]
    RecoveryFail,

    #[error("distinct-edge estimator failed at every level")]
    EstimateFail,

    #[error("oracle input too large: {0}")]
    BudgetExceeded(String),

    #[error("edge {0} is not live")]
    MissingEdge(Edge),
}

impl Error {
    pub(crate) fn invalid(at: u64, reason: impl Into<String>) -> Self {
        Error::InvalidStream {
            at,
            reason: reason.into(),
        }
    }
}
