use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    NotPrime(u32),
    BadDegree(u32),
    BudgetExceeded { what: &'static str, needed: u64, limit: u64 },
    DivisionByZero,
    /// A polynomial required to be irreducible is not.
    Reducible,
    DimensionMismatch(String),
    /// Operands live over different quivers or fields.
    Mismatch(String),
    InsufficientSamples { needed: usize, got: usize },
    /// Samples do not lie on a polynomial of the requested degree.
    Inconsistent { point: i64, expected: String, found: String },
    NotInvariant,
    NotAffine,
    NotNilpotent,
    /// Not enough closed points (irreducible polynomials) of some degree.
    FieldTooSmall { degree: usize, needed: usize, available: usize },
    /// A discrete class label does not pick out exactly one indecomposable.
    BadLabel(String),
    /// Class sums that must agree for every fixed module do not.
    NotUniversal(String),
    InvalidInput(String),
    /// An impossible state; indicates a bug.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::BadDegree(e) => write!(f, "extension degree must be at least 1, got {e}"),
            Error::BudgetExceeded { what, needed, limit } => {
                write!(f, "budget exceeded for {what}: need {needed}, limit {limit}")
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::Reducible => write!(f, "polynomial is not irreducible"),
            Error::DimensionMismatch(s) => write!(f, "dimension mismatch: {s}"),
            Error::Mismatch(s) => write!(f, "operand mismatch: {s}"),
            Error::InsufficientSamples { needed, got } => {
                write!(f, "need {needed} samples, got {got}")
            }
            Error::Inconsistent { point, expected, found } => write!(
                f,
                "samples inconsistent with degree bound at {point}: polynomial gives {expected}, sample is {found}"
            ),
            Error::NotInvariant => write!(f, "subspace is not invariant under the arrow maps"),
            Error::NotAffine => write!(f, "quiver is not affine"),
            Error::NotNilpotent => write!(f, "representation is not nilpotent"),
            Error::FieldTooSmall { degree, needed, available } => write!(
                f,
                "field too small: need {needed} distinct points of degree {degree}, only {available} exist"
            ),
            Error::BadLabel(s) => write!(f, "bad class label: {s}"),
            Error::NotUniversal(s) => write!(f, "class sum depends on the fixed module: {s}"),
            Error::InvalidInput(s) => write!(f, "invalid input: {s}"),
            Error::Internal(s) => write!(f, "internal error: {s}"),
        }
    }
}

impl core::error::Error for Error {}
