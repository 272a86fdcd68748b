use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex budget exceeded: {n} vertices, at most {max} supported")]
    VertexBudgetExceeded { n: usize, max: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("vertex subset is not contained in the vertex set: {0:?}")]
    NotASubset(Vec<usize>),

    #[error("gluing map is not injective")]
    NotInjective,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("cannot mix ordered and unordered elements")]
    ModeMismatch,

    #[error("ordered mode only supports the internal coproduct at q1 = q2 = 0")]
    OrderedNeedsZeroQ,

    #[error("invalid relation: {0}")]
    InvalidRelation(String),

    #[error("not a poset: relation is not antisymmetric")]
    NotAPoset,

    #[error("invalid system of edges: {0}")]
    InvalidEdgeSystem(String),

    #[error("monomial is not admissible")]
    NotAdmissible,

    #[error("monomial degree {degree} exceeds the truncation bound {bound}")]
    DroppedTerm { degree: u32, bound: u32 },

    #[error("squaring morphism requires q = q1*q2")]
    QFactorizationMismatch,

    #[error("alphabet too small for an injective realization: {needed} letters needed, {available} available")]
    InconclusiveOracle { needed: usize, available: usize },

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
