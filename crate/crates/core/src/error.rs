use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{name} must be at least {min}, got {value}")]
    BelowMinimum {
        name: &'static str,
        min: i64,
        value: i64,
    },
    #[error("parameter out of domain: {0}")]
    Domain(String),
    #[error("negative exponent {0}")]
    NegativeExponent(i64),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("modulus must be monic of degree at least 1")]
    NonMonicModulus,
    #[error("modulus constant term must be 1 or -1")]
    NonUnitConstant,
    #[error("unknown statement `{0}`; known statements: {1}")]
    UnknownStatement(String, String),
    #[error("malformed range: {0}")]
    MalformedRange(String),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

pub(crate) fn require_min(name: &'static str, value: i64, min: i64) -> Result<()> {
    if value < min {
        Err(Error::BelowMinimum { name, min, value })
    } else {
        Ok(())
    }
}
