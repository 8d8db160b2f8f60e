use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("enumeration is unbounded: constraints admit infinitely many partitions and no weight bound was given")]
    UnboundedEnumeration,

    #[error("invalid labels: {0}")]
    InvalidLabels(String),

    #[error("invalid rank: {0}")]
    InvalidRank(String),

    #[error("cutoff {cutoff} is below the requested degree {degree}")]
    Cutoff { cutoff: u32, degree: u32 },

    #[error("family {0} has no superdimension specialization")]
    Family(String),

    #[error("series denominator has zero constant term")]
    DivisionByZeroConstant,

    #[error("series quotient is not integral at degree {0}")]
    InexactDivision(u32),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("weight {0} is not dominant")]
    NondominantWeight(String),

    #[error("shift {0} does not make every weight integral")]
    NonIntegralShift(String),

    #[error("weight {0} has a negative exponent after shifting")]
    NegativeExponent(String),

    #[error("input is not a symmetric polynomial: {0}")]
    NonSymmetric(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
