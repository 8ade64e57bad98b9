//! Error type shared by the whole crate.

use crate::rational::Rational;

/// Everything that can go wrong while building or combining exact geometric
/// and operadic data.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("index {index} out of range for arity {arity}")]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("invalid interval [{lo}, {hi}]: need 0 <= lo <= hi <= 1")]
    InvalidInterval { lo: Rational, hi: Rational },
    #[error("degenerate interval [{0}, {0}] has no affine parameterization")]
    DegenerateInterval(Rational),
    #[error("scale {0} must be positive")]
    NonPositiveScale(Rational),
    #[error("affine image [{lo}, {hi}] exceeds the unit interval")]
    ImageOutOfBounds { lo: Rational, hi: Rational },
    #[error("cubes {first} and {second} have overlapping interiors")]
    Overlap { first: usize, second: usize },
    #[error("point lies outside the cube's closed image")]
    PointOutsideImage,
    #[error("coordinate {0} must be strictly between 0 and 1")]
    PointNotInterior(Rational),
    #[error("coordinate {0} must lie in [0, 1]")]
    PointOutsideUnit(Rational),
    #[error("threshold parameter {0} must lie in [1/2, 1)")]
    ThresholdRange(Rational),
    #[error("time {0} must lie in [0, 1]")]
    TimeRange(Rational),
    #[error("map does not send the basepoint to the basepoint")]
    NotPointed,
    #[error("not a permutation of 0..{0}")]
    InvalidPermutation(usize),
    #[error("property (D) violated: slots {first} and {second} are both non-base")]
    PropertyD { first: usize, second: usize },
    #[error("exact cubical support is unavailable for this term; use csupp_oracle")]
    SupportNeedsOracle,
    #[error("point is not in S(X): its structure element is not supported at a single point")]
    NotInS,
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
