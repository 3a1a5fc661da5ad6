use thiserror::Error;

/// Errors raised by the library. Every operation that validates its input
/// reports violations through this type instead of panicking.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0:?} is not an admissible exponent vector")]
    NotMember(Vec<u32>),

    #[error("{0:?} is not a ballot sequence")]
    NotBallot(Vec<i32>),

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },

    #[error("n must be at least {min}, got {n}")]
    SizeTooSmall { n: usize, min: usize },

    #[error("{what}: n = {n} exceeds the configured bound {bound}")]
    BudgetExceeded {
        what: &'static str,
        n: usize,
        bound: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("malformed tree: {0}")]
    MalformedTree(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
