//! Crate-wide error type.

use crate::parse::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    Parse(ParseError),
    NonSquareMatrix { rows: usize, cols: usize },
    EmptyMatrixList,
    DimensionMismatch(String),
    /// The ideal has a positive-dimensional (infinite) zero set.
    NotZeroDimensional,
    /// The ideal is the whole ring; the zero set is empty.
    UnitIdeal,
    /// Strict radical policy rejected a non-radical input.
    NotRadical,
    NotUnivariate,
    DuplicatePoints,
    DegreeMismatch { expected: usize, found: usize },
    /// A symmetric-group search was asked about variables outside its block.
    SupportOutsideBlock,
    EnumerationTooLarge(String),
    /// Cooperative deadline hit inside basis completion.
    Timeout { pairs_left: usize, basis_size: usize },
    /// The triangular set's zero set is not contained in the ideal's.
    NotContained,
    Io(String),
    Usage(String),
}

impl std::fmt::Display for Error {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Error::Parse(e) => write!(f, "parse error: {e}"),
            Error::NonSquareMatrix { rows, cols } => {
                write!(f, "matrix is not square ({rows}x{cols})")
            }
            Error::EmptyMatrixList => write!(f, "empty matrix list"),
            Error::DimensionMismatch(what) => write!(f, "dimension mismatch: {what}"),
            Error::NotZeroDimensional => write!(f, "ideal is not zero-dimensional"),
            Error::UnitIdeal => write!(f, "ideal is the unit ideal (empty zero set)"),
            Error::NotRadical => write!(f, "ideal is not radical (strict mode)"),
            Error::NotUnivariate => write!(f, "polynomial is not univariate"),
            Error::DuplicatePoints => write!(f, "duplicate points in input"),
            Error::DegreeMismatch { expected, found } => {
                write!(f, "permutation degree mismatch: expected {expected}, found {found}")
            }
            Error::SupportOutsideBlock => {
                write!(f, "polynomial support lies outside the permuted block")
            }
            Error::EnumerationTooLarge(what) => {
                write!(f, "enumeration too large: {what}")
            }
            Error::Timeout { pairs_left, basis_size } => write!(
                f,
                "timed out during basis completion ({pairs_left} pairs pending, basis size {basis_size})"
            ),
            Error::NotContained => {
                write!(f, "triangular set is not contained in the ideal's zero set")
            }
            Error::Io(msg) => write!(f, "io error: {msg}"),
            Error::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse(e)
    }
}

impl From<crate::poly::NotUnivariate> for Error {
    fn from(_: crate::poly::NotUnivariate) -> Self {
        Error::NotUnivariate
    }
}

pub type Result<T> = std::result::Result<T, Error>;
