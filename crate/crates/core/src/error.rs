use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph has {0} vertices; at most {max} are supported", max = crate::graphs::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edges must contain at least one vertex")]
    EmptyEdge,
    #[error("edge multiplicity must be positive")]
    ZeroMultiplicity,
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("graph must be 2-uniform{0}")]
    NotTwoUniform(&'static str),
    #[error("graph contains loops")]
    LoopsPresent,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("missing table entry for n = {0}")]
    MissingTableEntry(usize),
    #[error("bound inapplicable: {0}")]
    Inapplicable(String),
    #[error("degenerate pattern: {0}")]
    DegeneratePattern(String),
    #[error("search guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
