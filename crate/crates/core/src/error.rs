use thiserror::Error;

/// Errors raised by graph construction, parsing and the solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop edge ({0}, {0}) is not allowed in a simple graph")]
    LoopEdge(usize),

    #[error("graph has {n} vertices, limit for this operation is {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("operation requires a non-empty graph")]
    EmptyGraph,

    #[error("edge list, line {line}: {msg}")]
    EdgeList { line: usize, msg: String },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("vertex {0} must belong to the set")]
    NotInSet(usize),

    #[error("vertex {0} must lie outside the set")]
    InSet(usize),

    #[error("the set is not dominating")]
    NotDominating,

    #[error("the set is not a secure dominating set")]
    NotSecure,

    #[error("vertex {vertex} has {size} external private neighbors (at most 2 expected for outerplanar input)")]
    EpnTooLarge { vertex: usize, size: usize },

    #[error("extremal family is defined for k >= 2, got {0}")]
    InvalidK(usize),

    #[error("graph has {n} vertices, which is not of the form 5k+1 with k >= 2")]
    NotFiveKPlusOne { n: usize },

    #[error("graph has {n} vertices but G_{k} has {expected}")]
    SizeMismatch { n: usize, k: usize, expected: usize },

    #[error("sets do not partition the vertex set")]
    NotPartition,

    #[error("edge ({0}, {1}) lies inside one side of the bipartition")]
    NotBipartite(usize, usize),

    #[error("{what} must be in {min}..={max}, got {got}")]
    OutOfRange {
        what: &'static str,
        got: usize,
        min: usize,
        max: usize,
    },

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
