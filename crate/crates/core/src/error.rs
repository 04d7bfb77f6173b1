use thiserror::Error;

/// Errors raised while constructing or validating a [`Graph`](crate::Graph).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex id {id} out of range for {n} vertices")]
    VertexOutOfRange { id: u64, n: usize },
    #[error("edge ({u}, {v}) has non-positive weight")]
    NonPositiveWeight { u: u32, v: u32 },
    #[error("graph with {0} vertices exceeds the 32-bit vertex id space")]
    TooManyVertices(usize),
}

/// Errors raised when a solver's precondition is violated.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolverError {
    #[error("graph has {0} vertices; at least 2 are required")]
    TooFewVertices(usize),
    #[error("graph has {0} vertices; brute force is limited to 24")]
    TooManyVertices(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("epsilon must be positive and finite, got {0}")]
    InvalidEpsilon(f64),
}

/// Errors raised by [`Graph::cut_capacity`](crate::Graph::cut_capacity).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CutError {
    #[error("side marker has length {found}, graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("one side of the cut is empty")]
    Degenerate,
}

/// Errors raised by the METIS reader.
#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("edge count mismatch: header declares {expected} edges, found {found}")]
    EdgeCount { expected: u64, found: u64 },
    #[error("line {line}: edge {u}-{v} is not listed symmetrically")]
    Asymmetric { line: usize, u: u64, v: u64 },
    #[error("missing header line")]
    MissingHeader,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Errors raised by the graph generators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeneratorError {
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
