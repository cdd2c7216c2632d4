//! Error type shared across the crate.

/// Errors produced by validation and by the exact-arithmetic operations.
///
/// Every fallible operation in this crate returns [`Result`]; none panic on
/// user input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A part list that is not weakly decreasing, or otherwise malformed.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// Dominance comparison requested between partitions of different weights.
    #[error("incomparable weights: dominance order only compares partitions of equal weight")]
    IncomparableWeights,

    /// A matrix expected to be entrywise nonnegative has a negative entry
    /// (1-based row/column).
    #[error("negative entry at ({row}, {col})")]
    NegativeEntry { row: usize, col: usize },

    /// A matrix expected to be symmetric is not, or is not square.
    #[error("matrix is not symmetric")]
    NotSymmetric,

    /// The zero polynomial was supplied where a nonzero one is required.
    #[error("zero polynomial")]
    ZeroPolynomial,

    /// An operation needs more variables than were supplied.
    #[error("too few variables: need at least {needed}, got {given}")]
    TooFewVariables { needed: usize, given: usize },

    /// The support of the polynomial is not M-convex, so a discrete
    /// log-concavity check on it is not meaningful.
    #[error("support is not M-convex")]
    SupportNotMConvex,

    /// A bisymmetric input mixes degrees where a homogeneous one is required.
    #[error("mixed degrees: {0}")]
    MixedDegrees(String),

    /// Malformed textual input (rational, partition, or polynomial syntax).
    #[error("parse error: {0}")]
    Parse(String),

    /// Any other domain error, with a human-readable description.
    #[error("{0}")]
    Invalid(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
