use thiserror::Error;

use crate::partition::Cell;
use crate::tableau::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cell {0} lies outside the shape")]
    CellOutsideShape(Cell),
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(usize),
    #[error("k must be at least 1")]
    ZeroK,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("shape dimension {0} exceeds the supported bound of {max}", max = crate::partition::MAX_DIMENSION)]
    ShapeTooLarge(usize),
    #[error("weight part {part} exceeds k = {k}")]
    WeightPartTooLarge { part: usize, k: usize },
    #[error("weight {0:?} is not a partition")]
    WeightNotPartition(Vec<usize>),
    #[error("letter {letter} out of range 1..={max}")]
    LetterOutOfRange { letter: usize, max: usize },
    #[error("letter {0} does not occur in the standard sequence")]
    LetterNotInSequence(usize),
    #[error("cell set has no cell in the bottom row")]
    NoBottomRowCell,
    #[error("not a semistandard tableau: {0}")]
    NotSemistandard(String),
    #[error("invalid k-tableau: {0}")]
    InvalidTableau(Violation),
    #[error("parse error: {0}")]
    Parse(String),
}
