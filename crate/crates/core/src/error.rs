use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{op}: argument {value} is out of range")]
    NegativeArgument { op: &'static str, value: i64 },

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid spectrum: {0}")]
    InvalidSpectrum(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("brute-force oracle refused dimension {dim} (limit {limit})")]
    OracleTooLarge { dim: u64, limit: u64 },

    #[error("kappa must be positive, got {0}")]
    NonPositiveKappa(String),

    #[error("closed-factor S3 entry vanishes at kappa = {0}; the leading-order model does not apply")]
    VanishingS3(String),

    #[error("coefficient calibration failed: {0}")]
    Calibration(String),
}
