use thiserror::Error;

use crate::ratio::Ratio;

/// Errors raised by the exact spectrum routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("malformed rational `{input}`: {reason}")]
    MalformedRatio { input: String, reason: &'static str },

    #[error("rational `{input}` is not in lowest terms")]
    NotReduced { input: String },

    #[error("filling factor must be positive, got {nu}")]
    NonPositiveFilling { nu: Ratio },

    #[error("integer filling factor {nu} has no fractional dual partner")]
    IntegerFilling { nu: Ratio },

    #[error("Hausdorff dimension {h} must lie strictly between 1 and 2")]
    ClassOutOfRange { h: Ratio },

    #[error("Hausdorff dimension {h} must lie in [1, 2]")]
    DualClassOutOfRange { h: Ratio },

    #[error("Farey order must be at least 1")]
    ZeroFareyOrder,

    #[error("a transition chain needs at least 2 entries, got {len}")]
    ChainTooShort { len: usize },

    #[error("{left} and {right} are not Farey neighbours (|det| = {det})")]
    NotNeighbours {
        left: String,
        right: String,
        det: String,
    },
}

pub type Result<T> = std::result::Result<T, SpectrumError>;
