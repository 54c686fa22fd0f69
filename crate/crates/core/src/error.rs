use thiserror::Error;

/// Errors raised by the constructors, the exact matrix kernel and the
/// verification machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a generating set must be nonempty")]
    EmptySet,
    #[error("simplex {0} is not a member of the complex")]
    NotAMember(String),
    #[error("simplex {0} is not a facet")]
    NotAFacet(String),
    #[error("graph is not simple: {0}")]
    NotSimple(String),
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix dimensions do not match: {0}")]
    ShapeMismatch(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(String),
    #[error("{what}: dimension {dim} exceeds the limit of {max}; use a smaller instance")]
    TooLarge {
        what: &'static str,
        dim: usize,
        max: usize,
    },
    #[error("function is not locally injective: {0}")]
    NotLocallyInjective(String),
    #[error("function is missing a value for {0}")]
    MissingValue(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
