use thiserror::Error;

/// Errors raised by ring construction, parsing and the algebraic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is neither 0 nor a prime below 2^31")]
    BadCharacteristic(u64),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("exponent overflow (exponents are limited to 32 bits)")]
    ExponentOverflow,
    #[error("monomial length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("monomial order is not an elimination order for the requested variables")]
    NotEliminationOrder,
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("scaling factor must be a nonzero constant (a unit of the base ring)")]
    NonUnitScalar,
    #[error("shape error: {0}")]
    Shape(String),
    #[error("matrix entries must not involve the form variables or the elimination variable")]
    EntryNotInBaseRing,
    #[error("Rees algebra construction is degenerate: the maximal minors all vanish")]
    DegenerateRees,
    #[error("not a complex: the composite of maps {0} and {1} is nonzero")]
    NotAComplex(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
