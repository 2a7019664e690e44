use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge index {index} out of range for {m} edges")]
    EdgeIndexOutOfRange { index: usize, m: usize },
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid edge {edge:?}: {reason}")]
    InvalidEdge { edge: Vec<usize>, reason: String },
    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<usize>),
    #[error("edge {{{0}, {1}}} is not present")]
    EdgeNotFound(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("input graph is disconnected")]
    Disconnected,
    #[error("tensor is not weakly irreducible")]
    NotWeaklyIrreducible,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("entry {index} must be strictly positive")]
    NonPositiveEntry { index: usize },
    #[error("odd-bipartiteness is undefined for odd uniformity k = {0}")]
    OddUniformity(usize),
    #[error("not a partition of the vertex set: {0}")]
    NotAPartition(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
