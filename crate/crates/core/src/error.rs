use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex count {0} outside 1..=16")]
    VertexCount(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("orientation text parse error: {0}")]
    OrientationText(String),

    #[error("invalid partition: {0}")]
    Partition(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what} is {value}, budget is {limit}{hint}")]
    Budget {
        what: &'static str,
        value: u64,
        limit: u64,
        hint: &'static str,
    },

    #[error("vertex set does not induce a clique")]
    NotClique,

    #[error("vertex set is not independent")]
    NotIndependent,

    #[error("tournament is not strongly connected")]
    NotStronglyConnected,

    #[error("vertices {0} and {1} are adjacent")]
    Adjacent(usize, usize),

    #[error("edge-deletion pattern violated: {0}")]
    Pattern(String),

    #[error("unknown forbidden family {0:?}")]
    UnknownFamily(String),

    #[error("vector length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("checkpoint: {0}")]
    Checkpoint(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
