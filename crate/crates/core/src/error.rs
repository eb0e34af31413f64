use thiserror::Error;

use crate::ring::{Family, Variable};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The divisor's leading term failed to divide the running remainder.
    #[error("not divisible: remainder leading term {remainder} is not a multiple of {divisor}")]
    NotDivisible { remainder: String, divisor: String },

    #[error(
        "index underflow: shifting {family:?} variable by {shift} would produce index {index}"
    )]
    IndexUnderflow {
        family: Family,
        shift: i64,
        index: i64,
    },

    #[error("no value assigned to variable {0}")]
    UnassignedVariable(Variable),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("lattice point out of bounds: {0}")]
    OutOfBounds(String),

    /// A brute-force enumeration was refused because it would not stay at desk scale.
    #[error("too large: {0}")]
    TooLarge(String),

    /// A factorial tableau cell produced an `a`-index below 1.
    #[error(
        "factorial weight index {index} at cell ({row},{col}) is not a valid a-variable index"
    )]
    FactorialIndex { row: usize, col: usize, index: i64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An internal invariant was violated; always a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),
}
