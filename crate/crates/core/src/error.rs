use thiserror::Error;

/// Errors raised by graph construction, parsing and the solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("vertex set must be nonempty")]
    EmptySet,
    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph on {n} vertices exceeds the oracle cap of {cap}")]
    OracleCap { n: usize, cap: usize },
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
}

pub type Result<T> = std::result::Result<T, Error>;
