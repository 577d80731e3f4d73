use core::fmt;

use crate::scalar::TropScalar;

/// Errors reported by the tropical matrix routines.
///
/// Indices carried by the variants are zero-based; `Display` renders them
/// one-based, matching the usual matrix notation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operand shapes do not fit the operation.
    Dimension {
        op: &'static str,
        expected: (usize, usize),
        found: (usize, usize),
    },
    /// A square matrix was required.
    NotSquare { rows: usize, cols: usize },
    /// Matrices and vectors must have at least one row and one column.
    Empty,
    /// A vector was too short for the operation.
    TooShort { len: usize, min: usize },
    /// The series `A ⊕ A² ⊕ ⋯` is unbounded because the maximum cycle mean is positive.
    Divergent { mcm: TropScalar },
    /// `E ⊗ E ≠ E`; carries the first offending entry in row-major order.
    NotIdempotent { row: usize, col: usize },
    /// The idempotent does not have full rank.
    NotFullRank { rank: usize, n: usize },
    /// The matrix is not ℋ-related to the reference idempotent.
    NotInHClass,
    /// A zero diagonal was required.
    DiagonalNotZero { index: usize },
    /// The monomial unit does not commute with the idempotent.
    DoesNotCommute,
    /// No column of the idempotent is proportional to this column.
    MatchFailed { column: usize },
    /// The unit's permutation cycles have different mean weights.
    NonUniformCycleMeans,
    /// A finite matrix was expected but an entry is `-inf`.
    Infinite { row: usize, col: usize },
    /// Permutation enumeration refused because `n` exceeds the configured cap.
    TooLarge { n: usize, cap: usize },
    /// An internal postcondition failed. This is a bug, not an input error.
    Invariant(&'static str),
}

impl Error {
    /// Whether the error comes from the shape of the input rather than its algebra.
    pub fn is_shape_error(&self) -> bool {
        matches!(
            self,
            Error::Dimension { .. } | Error::NotSquare { .. } | Error::Empty | Error::TooShort { .. }
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Dimension { op, expected, found } => write!(
                f,
                "{op}: dimension mismatch, expected {}x{} but found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            Error::NotSquare { rows, cols } => {
                write!(f, "matrix must be square, found {rows}x{cols}")
            }
            Error::Empty => f.write_str("matrix or vector has no entries"),
            Error::TooShort { len, min } => {
                write!(f, "vector of length {len} is too short (need at least {min})")
            }
            Error::Divergent { mcm } => write!(f, "series diverges: maximum cycle mean {mcm} is positive"),
            Error::NotIdempotent { row, col } => {
                write!(f, "not idempotent at ({},{})", row + 1, col + 1)
            }
            Error::NotFullRank { rank, n } => {
                write!(f, "not of full rank: rank {rank} but size {n}")
            }
            Error::NotInHClass => f.write_str("matrix is not in the H-class of the idempotent"),
            Error::DiagonalNotZero { index } => write!(f, "diagonal entry ({},{}) is not zero", index + 1, index + 1),
            Error::DoesNotCommute => f.write_str("unit does not commute with the idempotent"),
            Error::MatchFailed { column } => write!(
                f,
                "column {} is not proportional to any column of the idempotent",
                column + 1
            ),
            Error::NonUniformCycleMeans => f.write_str("permutation cycles of the unit have different means"),
            Error::Infinite { row, col } => {
                write!(
                    f,
                    "entry ({},{}) is -inf where a finite value is required",
                    row + 1,
                    col + 1
                )
            }
            Error::TooLarge { n, cap } => write!(f, "refusing to enumerate permutations of {n} points (cap is {cap})"),
            Error::Invariant(what) => write!(f, "internal invariant violated: {what}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
