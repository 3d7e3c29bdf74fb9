use thiserror::Error;

/// Errors raised by graph, topology and cohomology operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown vertex label {0}")]
    UnknownVertex(i64),
    #[error("unknown edge ({0}, {1})")]
    UnknownEdge(i64, i64),
    #[error("self-loop at vertex {0}")]
    SelfLoop(i64),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(i64, i64),
    #[error("duplicate vertex label {0}")]
    DuplicateVertex(i64),
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("function is not injective: vertices {0} and {1} share a value")]
    NotInjective(i64, i64),
    #[error("function has {got} values but the graph has {expected} vertices")]
    FunctionArity { expected: usize, got: usize },
    #[error("map is not a graph automorphism: {0}")]
    NotAutomorphism(String),
    #[error("unknown builtin graph `{0}`")]
    UnknownBuiltin(String),
    #[error("bad parameters for builtin `{name}`: {reason}")]
    BadParams { name: String, reason: String },
    #[error("base of a pyramid extension is not contractible ({0})")]
    BaseNotContractible(String),
    #[error("sub-basis is not a valid graph topology ({0})")]
    InvalidTopology(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by malformed or out-of-contract input.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Internal(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
