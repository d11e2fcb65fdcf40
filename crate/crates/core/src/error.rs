use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient variable count mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("alpha undefined for the zero ideal")]
    AlphaUndefined,

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph with {n} vertices is too large for exhaustive check (limit {limit})")]
    TooLargeForExhaustiveCheck { n: usize, limit: usize },

    #[error("resource cap exceeded: {what} reached {count} (cap {cap})")]
    ResourceCap {
        what: &'static str,
        count: usize,
        cap: usize,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("monomial is not a minimal vertex 2-cover")]
    NotMinimalTwoCover,

    #[error("generator {0} is not squarefree")]
    NotSquarefree(String),

    #[error("parse error: {0}")]
    Parse(String),
}
