use thiserror::Error;

/// Errors produced by the algebra, parser, sieve and derivation routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid algebra id {0}: expected 0..=15")]
    InvalidAlgebraId(i64),

    #[error("division by zero: the zero octonion has no inverse")]
    DivisionByZero,

    #[error("not an equivalent algebra: {0}")]
    NotAnEquivalentAlgebra(String),

    #[error("invalid triplet {0:?}: indices must be pairwise distinct and in 1..=7")]
    InvalidTriplet([u8; 3]),

    #[error("invalid triplet set: {0}")]
    InvalidTripletSet(String),

    #[error("invalid parity word {0:?}: expected seven '+' or '-' characters")]
    InvalidParityWord(String),

    #[error("invalid basis index {0}: expected 1..=7")]
    InvalidBasisIndex(u8),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("unbound variable `{0}`")]
    UnboundVariable(String),

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("non-finite coefficient in octonion")]
    NonFinite,

    #[error("matrix entry {0} is not an integer")]
    NonIntegerEntry(f64),
}

/// Syntax error in an expression, with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty expression")]
    EmptyInput,

    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
}

impl Error {
    /// Short machine-readable name of the error variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidAlgebraId(_) => "invalid-algebra-id",
            Error::DivisionByZero => "division-by-zero",
            Error::NotAnEquivalentAlgebra(_) => "not-an-equivalent-algebra",
            Error::InvalidTriplet(_) => "invalid-triplet",
            Error::InvalidTripletSet(_) => "invalid-triplet-set",
            Error::InvalidParityWord(_) => "invalid-parity-word",
            Error::InvalidBasisIndex(_) => "invalid-basis-index",
            Error::Parse(ParseError::EmptyInput) => "empty-input",
            Error::Parse(ParseError::Syntax { .. }) => "syntax-error",
            Error::UnboundVariable(_) => "unbound-variable",
            Error::PreconditionViolation(_) => "precondition-violation",
            Error::NonFinite => "non-finite",
            Error::NonIntegerEntry(_) => "non-integer-entry",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
