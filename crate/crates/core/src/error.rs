use thiserror::Error;

/// Errors raised by ideal, graph and resolution operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient size mismatch: expected {expected} variables, found {found}")]
    AmbientMismatch { expected: usize, found: usize },

    #[error("operation is undefined on the zero ideal")]
    ZeroIdeal,

    #[error("at most {max} variables are supported, got {found}")]
    TooManyVariables { max: usize, found: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("vertex {0} is not in the vertex set")]
    UnknownVertex(usize),

    #[error("underlying graph is not a forest")]
    NotAForest,

    #[error("graph is not normalized: source {0} has weight {1}")]
    NotNormalized(usize, u32),

    #[error("graph has edges but no distant leaf")]
    NoDistantLeaf,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("resource cap exceeded: {what} is {found}, cap is {cap}; {hint}")]
    ResourceCap {
        what: &'static str,
        found: usize,
        cap: usize,
        hint: &'static str,
    },

    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
