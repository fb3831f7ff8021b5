use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("series tail not certifiable at r = {r} after {terms} terms")]
    TailNotCertifiable { r: f64, terms: usize },

    #[error("partition index {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("left-hand side is not increasing between r = {lo} and r = {hi}")]
    NonMonotoneDetected { lo: f64, hi: f64 },

    #[error("adaptive quadrature on [{a}, {b}] exceeded its subdivision cap")]
    QuadratureDepthExceeded { a: f64, b: f64 },

    #[error("bisection did not reach the root tolerance within {0} iterations")]
    NoConvergence(usize),
}

impl Error {
    /// Process exit code used by the `bohr` binary.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidParams(_) => 1,
            _ => 2,
        }
    }
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParams(msg.into())
}
