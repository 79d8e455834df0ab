use thiserror::Error;

use crate::shapes::Partition;

/// Errors produced by the combinatorial and symmetric-function routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("maxDes defined for even size, got |mu| = {0}")]
    OddSize(usize),

    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("tableau is not column-strict")]
    NotColumnStrict,

    #[error("tableau is not standard")]
    NotStandard,

    #[error("cell set is not a skew shape")]
    NotSkew,

    #[error("interval [{start}, {end}] is out of range for a tableau with {size} cells")]
    IntervalOutOfRange { start: usize, end: usize, size: usize },

    #[error("values {0:?} do not form a consecutive interval")]
    NotConsecutive(Vec<usize>),

    #[error("no admissible jeu de taquin slide into cell ({row},{col})")]
    NoSlide { row: usize, col: usize },

    #[error("tableau shapes are not nested skew shapes")]
    NotNested,

    #[error("invalid domino tableau: {0}")]
    InvalidDomino(String),

    #[error("theta needs an inner staircase delta_k with k >= 2")]
    StaircaseTooSmall,

    #[error("cell ({row},{col}) is the source of more than one arrow")]
    AmbiguousArrow { row: usize, col: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("Schur coefficient of s_{0} is not an integer")]
    NonIntegral(Partition),

    #[error("no tableau formula known for lambda = {0}")]
    UnsolvedClass(Partition),
}

pub type Result<T> = std::result::Result<T, Error>;
