use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("invalid character at position {0}")]
    InvalidCharacter(usize),
    #[error("malformed NSG text: {0}")]
    MalformedNsg(String),
    #[error("invalid NSG form: {0}")]
    InvalidNsg(String),
    #[error("order {0} is too small")]
    OrderTooSmall(usize),
    #[error("invalid edge ({0}, {1}): {2}")]
    InvalidEdge(usize, usize, &'static str),
    #[error("edge list parse error on line {line}: {msg}")]
    EdgeListParse { line: usize, msg: String },
    #[error("NSG form has no classes")]
    EmptyNsg,
    #[error("matrix is not symmetric (|a[{0}][{1}] - a[{1}][{0}]| too large)")]
    NotSymmetric(usize, usize),
    #[error("matrix has a non-finite entry at ({0}, {1})")]
    NonFinite(usize, usize),
    #[error("eigenvalue iteration did not converge")]
    NoConvergence,
    #[error("class {0} is empty")]
    EmptyClass(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("order {order} exceeds the configured cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
