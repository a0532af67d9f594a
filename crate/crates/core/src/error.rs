use num_bigint::BigInt;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
    #[error("matrix dimension {dim} exceeds limit {limit}")]
    DimensionTooLarge { dim: usize, limit: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("parity entries must be 0 or 1")]
    InvalidParity,
    #[error("{count} spanning trees exceed the enumeration cap of {cap}")]
    EnumerationCapExceeded { count: BigInt, cap: u64 },
    #[error("order {order} exceeds the sign-sum size guard of {limit} (override to proceed)")]
    SizeGuardRefused { order: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
