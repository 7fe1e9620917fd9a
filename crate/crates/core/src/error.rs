use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a side with {bound} vertices")]
    VertexOutOfRange { vertex: usize, bound: usize },
    #[error("{what}: expected length {expected}, got {got}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("objective entry {0} exceeds the supported magnitude 2^31")]
    ObjectiveOutOfRange(i64),
    #[error("vertex count {0} exceeds the supported limit 10000")]
    TooManyVertices(usize),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("{what} has {got}, limit is {limit}")]
    TooLarge {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    #[error("{0} is not a vertex of the polytope")]
    NotAVertex(String),
    #[error("{0} is a vertex of the polytope and has no convex witness")]
    IsAVertex(String),
    #[error("point is not a member of the point set")]
    PointNotInSet,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}
