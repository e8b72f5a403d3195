use thiserror::Error;

/// Errors raised by the library. Every variant carries enough context to
/// explain the failure without a backtrace.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("quotient not a Laurent-polynomial series")]
    InexactDivision,
    #[error("coefficient at q^({n24}/24) requested beyond precision {prec24}/24")]
    BeyondPrecision { n24: i64, prec24: i64 },
    #[error("parse error at column {col}: {msg}")]
    Parse { col: usize, msg: String },
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("index underflow: {0}")]
    IndexUnderflow(String),
    #[error("seed multiplier incompatible with Q: {0}")]
    IncompatibleMultiplier(String),
    #[error("seed is not a cusp form: {0}")]
    NotCusp(String),
    #[error("matrix has determinant {0}, not 1 modulo N")]
    NotInGroup(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),
    #[error("linear system has no unique solution: {0}")]
    Singular(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
