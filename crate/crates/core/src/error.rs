use thiserror::Error;

/// Reasons a parameter tuple is not a uniquely reduced ordinary presentation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("p = {0} is not prime")]
    NotPrime(u64),
    #[error("not reduced: condition `{0}` fails")]
    NotReduced(&'static str),
    #[error("p = 2 with s >= n - 1 describes an exceptional 2-group")]
    Exceptional2Group,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a unit modulo the field order")]
    UnitRequired(i64),
    #[error("group or field too large for this operation: {0}")]
    TooLarge(String),
    #[error("outside the range where this closed form holds: {0}")]
    OutOfRange(String),
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("quotient parameters are not reduced: {0}")]
    QuotientNotReduced(String),
    #[error("descriptor does not belong to this group: {0}")]
    InvalidDescriptor(String),
    #[error("class is not faithful: {0}")]
    NotFaithful(String),
    #[error("mismatch: {0}")]
    Mismatch(String),
    #[error("orthogonality failure between descriptors {0} and {1}")]
    OrthogonalityFailure(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
