use thiserror::Error;

/// Domain errors raised by kernel operations.
///
/// The `code` of each variant is the stable identifier printed by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ENDPOINT_MISMATCH: {0}")]
    EndpointMismatch(String),
    #[error("INSTANCE_TOO_LARGE: {0}")]
    InstanceTooLarge(String),
    #[error("TRUNCATION_EXCEEDED: {0}")]
    TruncationExceeded(String),
    #[error("ZERO_ARGUMENT: {0}")]
    ZeroArgument(String),
    #[error("NOT_RESCALABLE: {0}")]
    NotRescalable(String),
    #[error("ZERO_VALUATION: {0}")]
    ZeroValuation(String),
    #[error("MIXED_ALPHABET: {0}")]
    MixedAlphabet(String),
    #[error("DIVERGENT_REGION: {0}")]
    DivergentRegion(String),
    #[error("NOT_CONVERTIBLE: {0}")]
    NotConvertible(String),
    #[error("INVALID_ARGUMENT: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::EndpointMismatch(_) => "ENDPOINT_MISMATCH",
            Error::InstanceTooLarge(_) => "INSTANCE_TOO_LARGE",
            Error::TruncationExceeded(_) => "TRUNCATION_EXCEEDED",
            Error::ZeroArgument(_) => "ZERO_ARGUMENT",
            Error::NotRescalable(_) => "NOT_RESCALABLE",
            Error::ZeroValuation(_) => "ZERO_VALUATION",
            Error::MixedAlphabet(_) => "MIXED_ALPHABET",
            Error::DivergentRegion(_) => "DIVERGENT_REGION",
            Error::NotConvertible(_) => "NOT_CONVERTIBLE",
            Error::InvalidArgument(_) => "INVALID_ARGUMENT",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
