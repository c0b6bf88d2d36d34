use thiserror::Error;

use crate::cli::codefile::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("gcd(0, 0) is undefined")]
    UndefinedGcd,
    #[error("reciprocal undefined for a polynomial with zero constant term")]
    ReciprocalUndefined,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("row module does not reach column {column}")]
    RankDeficient { column: usize },
    #[error("index {index} out of range (expected < {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("{q}^{k} codewords exceed the enumeration cap {cap}")]
    TooLargeToEnumerate { q: u64, k: usize, cap: u64 },
    #[error("{count} minors exceed the cap {cap}")]
    TooManyMinors { count: u128, cap: u64 },
    #[error("polynomial does not divide x^m - lambda")]
    NotADivisor,
    #[error("zero twist constant in block {block}")]
    ZeroLambda { block: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
    #[error("not applicable: {0}")]
    NotApplicable(&'static str),
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("i/o: {0}")]
    Io(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
