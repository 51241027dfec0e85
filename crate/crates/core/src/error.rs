use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid bilinear form: {0}")]
    InvalidForm(String),

    #[error("unsupported morphism: {0}")]
    UnsupportedMorphism(String),

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("not Gorenstein: {0}")]
    NotGorenstein(String),

    #[error("undecided: {0}")]
    Undecided(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// Parse failure tied to a location in an input file.
    #[error("{file}:{line}: {msg}")]
    Input { file: String, line: usize, msg: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),
}
