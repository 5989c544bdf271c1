use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter set hits one of the excluded pole configurations.
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    /// No numerator parameter forces the series to terminate.
    #[error("series does not terminate: no numerator parameter is a non-positive integer")]
    NonTerminating,

    /// A denominator factor vanishes inside the summation range.
    #[error("pole in denominator: {0}")]
    PoleInDenominator(String),

    /// A difference operator addressed a point outside the grid with a nonzero weight.
    #[error("boundary leak: nonzero coefficient references x = {0}")]
    BoundaryLeak(i64),

    /// An intermediate quantity that must be inverted is zero.
    #[error("zero divisor: {0}")]
    ZeroDivisor(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("matrix product leaves the tridiagonal band at ({row}, {col})")]
    BandOverflow { row: usize, col: usize },

    /// Two independent computations of the same quantity disagree.
    #[error("inconsistent results: {0}")]
    Inconsistent(String),

    #[error("cannot parse rational {0:?}: expected \"p/q\" or an integer literal")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
