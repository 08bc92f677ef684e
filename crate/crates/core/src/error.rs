use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex id {id} out of range for a graph on {n} vertices")]
    IdOutOfRange { id: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("empty input: at least one part is required")]
    EmptyInput,

    #[error("operation requires a graph with at least one vertex")]
    EmptyGraph,

    #[error("graph is not connected")]
    NotConnected,

    #[error("weighting has {got} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },

    #[error("weight {weight} at vertex {vertex} is below 1")]
    WeightBelowOne { vertex: usize, weight: String },

    #[error("negative weight {weight} at index {index}")]
    NegativeWeight { index: usize, weight: String },

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("construction failed:\n{trace}")]
    ConstructionFailed { trace: String },

    #[error("graph contains a triangle {0:?}")]
    NotTriangleFree(Vec<usize>),

    #[error("graph contains a 4-cycle {0:?}")]
    NotC4Free(Vec<usize>),

    #[error("edge ({0}, {1}) is not in the graph")]
    EdgeNotInGraph(usize, usize),

    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),

    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
