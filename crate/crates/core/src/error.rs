use thiserror::Error;

/// Errors raised anywhere in the pipeline.
///
/// Variants split into two families: bad input (parse errors, unknown
/// labels, malformed arguments) and precondition refusals, where the input
/// is well formed but the requested invariant is not described by the
/// underlying theory. The CLI maps the first family to exit status 1 and
/// refusals to exit status 2.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown constructor `{0}`")]
    UnknownConstructor(String),
    #[error("loop at vertex `{0}`")]
    Loop(String),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(String, String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{vertices} vertices exceeds the subset-enumeration limit of {limit}; pass --allow-large to override")]
    TooLarge { vertices: usize, limit: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("refused: {0}")]
    Refused(String),
}

impl Error {
    pub(crate) fn refused(reason: impl Into<String>) -> Self {
        Error::Refused(reason.into())
    }

    pub(crate) fn invalid(reason: impl Into<String>) -> Self {
        Error::InvalidArgument(reason.into())
    }

    pub fn is_refusal(&self) -> bool {
        matches!(self, Error::Refused(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
