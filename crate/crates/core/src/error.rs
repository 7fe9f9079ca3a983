use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: malformed header: {reason}")]
    MalformedHeader { line: usize, reason: String },

    #[error("line {line}: malformed edge: {reason}")]
    MalformedEdge { line: usize, reason: String },

    #[error("line {line}: vertex id {vertex} out of range 1..={n}")]
    VertexOutOfRange { line: usize, vertex: i64, n: usize },

    #[error("line {line}: edge has {found} vertices, expected {expected}")]
    EdgeSize {
        line: usize,
        found: usize,
        expected: usize,
    },

    #[error("line {line}: vertex {vertex} repeated within edge")]
    DuplicateVertex { line: usize, vertex: usize },

    #[error("line {line}: duplicate edge (same vertex set as line {first_line})")]
    DuplicateEdge { line: usize, first_line: usize },

    #[error("edge count mismatch: header declares {declared}, found {found}")]
    EdgeCount { declared: usize, found: usize },

    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what} exceeds cap: {size} > {cap}")]
    CapExceeded { what: String, size: u128, cap: u128 },

    #[error("no simple hypergraph found within {attempts} attempts")]
    GenerationFailed { attempts: usize },

    #[error("arithmetic overflow computing {0}")]
    Overflow(String),

    #[error("series did not converge within {0} terms")]
    NonConvergence(usize),

    #[error("marginal estimate for vertex {vertex} is zero after {samples} samples")]
    ZeroMarginal { vertex: usize, samples: u64 },

    #[error("line {line}: malformed stream record: {reason}")]
    MalformedStream { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for errors caused by malformed or inconsistent user input.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::MalformedHeader { .. }
                | Error::MalformedEdge { .. }
                | Error::VertexOutOfRange { .. }
                | Error::EdgeSize { .. }
                | Error::DuplicateVertex { .. }
                | Error::DuplicateEdge { .. }
                | Error::EdgeCount { .. }
                | Error::InvalidHypergraph(_)
                | Error::InvalidArgument(_)
                | Error::MalformedStream { .. }
        )
    }

    /// True for errors raised because a computation hit a size or budget limit.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::CapExceeded { .. }
                | Error::GenerationFailed { .. }
                | Error::Overflow(_)
                | Error::NonConvergence(_)
                | Error::ZeroMarginal { .. }
        )
    }
}
