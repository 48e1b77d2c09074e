use thiserror::Error;

use crate::params::CurveFamily;

/// Errors raised by the genus library.
///
/// Every arithmetic step in a genus computation is exact; a remainder where
/// the theory guarantees divisibility surfaces as [`Error::NonIntegral`]
/// rather than being rounded away.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} must be positive, got {value}")]
    NonPositive { what: &'static str, value: i128 },

    #[error("{0} is not prime")]
    NotPrime(i128),

    #[error("curve parameter s must be at least 1, got {0}")]
    InvalidS(u32),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("expected {expected} parameters, got {found}")]
    WrongFamily { expected: CurveFamily, found: CurveFamily },

    #[error("invalid standard exponents ({n1}, {n2}, {a}) for m = {m}")]
    InvalidStandardExponents { n1: i128, n2: i128, a: i128, m: i128 },

    #[error("{what} = {value} does not divide {modulus}")]
    NotADivisor {
        what: &'static str,
        value: i128,
        modulus: i128,
    },

    #[error("invalid parameter for {kind}: {reason}")]
    InvalidParameter { kind: &'static str, reason: String },

    #[error("{context}: {numerator} is not divisible by {denominator}")]
    NonIntegral {
        context: String,
        numerator: i128,
        denominator: i128,
    },

    #[error("the identity element has no ramification contribution")]
    IdentityElement,

    #[error("order class {0} depends on the Singer exponent; use iota_sigma_element")]
    SingerRouted(&'static str),

    #[error("7 does not divide m = {0}; no skew subgroups exist")]
    SevenDoesNotDivideM(i128),

    #[error("Frobenius exponent d = {d} outside 0..{limit}")]
    DegreeOutOfRange { d: u32, limit: u32 },

    #[error("{what} = {value} exceeds the configured cap {cap}")]
    CapExceeded { what: &'static str, value: u128, cap: u128 },

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("record failed validation: {0}")]
    InvalidRecord(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(err: csv::Error) -> Self {
        Error::Io(err.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Io(err.to_string())
    }
}

/// Exact division, failing loudly on a remainder.
pub(crate) fn exact_div(numerator: i128, denominator: i128, context: impl FnOnce() -> String) -> Result<i128> {
    if denominator == 0 || numerator % denominator != 0 {
        return Err(Error::NonIntegral {
            context: context(),
            numerator,
            denominator,
        });
    }
    Ok(numerator / denominator)
}
