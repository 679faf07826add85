use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },

    #[error("vertex {vertex} is outside 0..{n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("degenerate input: {0}")]
    Degenerate(&'static str),

    #[error("boundary is undefined for an empty or full vertex set")]
    TrivialBipartition,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid {family} parameters: {reason}")]
    InvalidFamily { family: &'static str, reason: String },

    #[error("first product factor must be simple: {0}")]
    NonSimpleFactor(&'static str),

    #[error("source and sink sets must be nonempty and disjoint")]
    BadTerminals,

    #[error("graph has {n} vertices, above the brute-force ceiling of {ceiling}; use the flow method")]
    AboveCeiling { n: usize, ceiling: usize },

    #[error("restriction order k={0} is not supported (expected 1, 2 or 3)")]
    UnsupportedOrder(usize),

    #[error("size window [{lo}, {hi}] is empty for a graph on {n} vertices")]
    EmptyWindow { lo: usize, hi: usize, n: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
