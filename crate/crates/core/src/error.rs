use thiserror::Error;

use crate::root_system::Family;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for type {family}")]
    InvalidRank { family: Family, rank: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("parabolic set contains every simple root, the flag variety is a point")]
    TrivialFlag,

    #[error("class is not Kähler: every coefficient must be strictly positive")]
    NotKahler,

    #[error("class is not integral: {0}")]
    NotIntegral(String),

    #[error("Picard number is 1, the primitive lattice is zero")]
    PicardRankOne,

    #[error("line bundle {0} is not primitive (nonzero degree)")]
    NotPrimitive(usize),

    #[error("line bundle {0} is trivial")]
    TrivialBundle(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("the torus fiber must have even dimension, got {0} curvature classes")]
    OddCount(usize),

    #[error("Ricci class is not proportional to the first curvature class")]
    NotProportional,

    #[error("unsupported Lie type {0}: only type A is realised numerically")]
    UnsupportedType(Family),

    #[error("Hermitian form is numerically singular")]
    IllConditioned,
}

impl Error {
    /// Stable identifier used in machine-readable reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidRank { .. } => "InvalidRank",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::TrivialFlag => "TrivialFlag",
            Error::NotKahler => "NotKahler",
            Error::NotIntegral(_) => "NotIntegral",
            Error::PicardRankOne => "PicardRankOne",
            Error::NotPrimitive(_) => "NotPrimitive",
            Error::TrivialBundle(_) => "TrivialBundle",
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::OddCount(_) => "OddCount",
            Error::NotProportional => "NotProportional",
            Error::UnsupportedType(_) => "UnsupportedType",
            Error::IllConditioned => "IllConditioned",
        }
    }
}
