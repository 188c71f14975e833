use thiserror::Error;

/// Errors raised by the category, quon and graph layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch in {what}: expected {expected}, found {found}")]
    ShapeMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("label index {index} is out of range for a category of rank {rank}")]
    InvalidLabel { index: usize, rank: usize },

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("unsupported parameter: {0}")]
    Unsupported(String),

    #[error("quons live over different categories ({left} vs {right})")]
    CategoryMismatch { left: String, right: String },

    #[error("expected a quon of order {expected}, got order {found}")]
    OrderMismatch { expected: usize, found: usize },

    #[error("fusion multiplicity N[{a}][{b}][{c}] = {mult} exceeds 1")]
    NotMultiplicityFree {
        a: usize,
        b: usize,
        c: usize,
        mult: u32,
    },

    #[error("recoupling data rejected: {0}")]
    InvalidRecoupling(String),

    #[error("{what}: {size} exceeds the limit {limit}")]
    GuardExceeded {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("embedding is not local: {0}")]
    NonLocalEmbedding(String),

    #[error("malformed combinatorial map: {0}")]
    InvalidMap(String),

    #[error("graph cannot be evaluated: {0}")]
    UnsupportedGraph(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// A positioned error from one of the text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
