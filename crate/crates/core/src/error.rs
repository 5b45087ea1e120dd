use thiserror::Error;

/// Construction and query failures on the graph types.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("duplicate arc ({0},{1})")]
    DuplicateArc(usize, usize),
    #[error("multiplicity {mult} on pair {u}-{v} exceeds 2")]
    Multiplicity { u: usize, v: usize, mult: u8 },
    #[error("operation needs at least one vertex")]
    EmptyVertexSet,
    #[error("digraph has a 2-cycle on {0}-{1}; an orientation is required")]
    TwoCycle(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = GraphError> = std::result::Result<T, E>;
