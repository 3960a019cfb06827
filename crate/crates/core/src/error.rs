use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {0} exceeds the supported maximum of 64 vertices")]
    TooManyVertices(usize),

    #[error("vertex {vertex} is out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("malformed graph6 input: {0}")]
    Graph6(String),

    #[error("malformed degree sequence: {0}")]
    DegreeSequence(String),

    #[error("malformed block specification: {0}")]
    BlockSpec(String),

    #[error("malformed construction string: {0}")]
    Construction(String),

    #[error("invalid permutation: {0}")]
    Permutation(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("degree sequence {0} is not graphical")]
    NotGraphical(String),

    #[error("order {order} outside the supported range for {what}")]
    OrderOutOfRange { order: usize, what: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
