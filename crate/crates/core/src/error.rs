use thiserror::Error;

use crate::diagram::MAX_GENERATORS;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix must be {n}x{n}, row {row} has {len} entries")]
    Shape { n: usize, row: usize, len: usize },
    #[error("expected {expected} generator names, got {got}")]
    NameCount { expected: usize, got: usize },
    #[error("duplicate generator name {0:?}")]
    DuplicateName(String),
    #[error("matrix is not symmetric at ({i}, {j})")]
    NonSymmetric { i: usize, j: usize },
    #[error("diagonal entry ({i}, {i}) must be 1")]
    BadDiagonal { i: usize },
    #[error("off-diagonal entry ({i}, {j}) must be at least 2 or infinity")]
    BadOrder { i: usize, j: usize },
    #[error("{n} generators exceeds the capacity of {MAX_GENERATORS}")]
    TooLarge { n: usize },
    #[error("generator index {index} out of range for {n} generators")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("corpus of {size} matrices exceeds the limit of {limit}")]
    CorpusTooLarge { size: u128, limit: u128 },
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("{count} maximal cores exceed the partition limit of {limit}")]
    TooManyCores { count: usize, limit: usize },
    #[error("invalid join set: {0}")]
    InvalidJoinSet(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid generator configuration: {0}")]
    InvalidConfig(String),
    #[error("minimal hyperbolic subset of size {0} found; the size bound of 10 is violated")]
    SizeBoundViolated(usize),
}

impl Error {
    /// True for errors that mean an instance is beyond what the enumerations support.
    pub fn is_capacity(&self) -> bool {
        matches!(
            self,
            Error::TooLarge { .. } | Error::TooManyCores { .. } | Error::CorpusTooLarge { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
