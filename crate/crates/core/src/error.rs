use thiserror::Error;

use crate::char_rings::BasisLabel;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition `{text}`: {reason}")]
    InvalidPartition { text: String, reason: String },

    #[error("partition weight {weight} exceeds the limit {limit}")]
    WeightLimit { weight: usize, limit: usize },

    #[error("degree {degree} is beyond the series cutoff {cutoff}")]
    DegreeOverflow { degree: usize, cutoff: usize },

    #[error("series term of degree {degree} is not homogeneous of that degree")]
    DegreeMismatch { degree: usize },

    #[error("series has constant term other than s_0 and cannot be inverted")]
    NotInvertible,

    #[error("mixed bases: expected {expected}, found {found}")]
    MixedBasis { expected: BasisLabel, found: BasisLabel },

    #[error("operation not defined for basis {basis}: {reason}")]
    BasisMisuse { basis: BasisLabel, reason: String },

    #[error("evaluation points are not pairwise distinct; the Vandermonde denominator vanishes")]
    SingularDenominator,

    #[error("partition {partition} is outside the stable range (length > {rank})")]
    OutOfStableRange { partition: String, rank: usize },

    #[error("eigenvalue parameters must be nonzero")]
    ZeroValue,

    #[error("invalid eigenvalue specification: {0}")]
    InvalidSpec(String),

    #[error("invalid number `{0}`")]
    InvalidNumber(String),
}
