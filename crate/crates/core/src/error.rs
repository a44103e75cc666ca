use num::BigUint;
use thiserror::Error;

/// Errors produced anywhere in the library.
///
/// Variants are grouped by the exit code the command-line front end maps them
/// to (see [`Error::exit_code`]).
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("size budget exceeded: {what} needs {needed} vertices, budget is {budget}")]
    Budget {
        what: String,
        needed: BigUint,
        budget: usize,
    },

    #[error("m-retry cap exceeded: no certificate found with m <= {cap}")]
    RetryCap { cap: u64 },

    #[error("join of an empty list of graphs")]
    EmptyJoin,

    #[error("graph is not well-covered: maximal independent sets of sizes {small} and {large}")]
    NotWellCovered { small: usize, large: usize },

    #[error("binomial chain violated at t = {index}")]
    ChainViolated { index: usize },

    #[error("target values at indices {first} and {second} are equal")]
    TiedTargets { first: usize, second: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code: 1 internal, 2 budget, 3 domain, 4 usage.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Internal(_) | Error::Io(_) | Error::Json(_) => 1,
            Error::Budget { .. } | Error::RetryCap { .. } => 2,
            Error::NotWellCovered { .. }
            | Error::ChainViolated { .. }
            | Error::TiedTargets { .. }
            | Error::Graph6(_) => 3,
            Error::InvalidParameters(_) | Error::InvalidPermutation(_) | Error::EmptyJoin => 4,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
