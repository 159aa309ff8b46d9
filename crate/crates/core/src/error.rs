use num_bigint::BigInt;
use thiserror::Error;

use crate::partitions::ConstraintFamily;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("constant term {constant} is not a unit, series cannot be inverted")]
    NonUnitConstantTerm { constant: BigInt },

    #[error("infinite product with offset 0 diverges")]
    DivergentProduct,

    #[error("invalid product factor: modulus must be at least 1")]
    InvalidModulus,

    #[error("division by the q^{degree} factor left a non-integral quotient")]
    NonIntegralDivision { degree: usize },

    #[error("invalid Gordon parameters k={k}, a={a} (need k >= 2, 1 <= a <= k)")]
    InvalidGordonParams { k: u32, a: u32 },

    #[error("partition parts must be positive")]
    NonPositivePart,

    #[error("partition {parts} violates the {family} conditions")]
    ConstraintViolation {
        family: ConstraintFamily,
        parts: String,
    },

    #[error("family {0} has no constructive bijection")]
    NoBijection(ConstraintFamily),

    #[error("family {0} has no anchored base partition")]
    InvalidVariant(ConstraintFamily),

    #[error("pair index {index} out of range ({pairs} pairs)")]
    PairIndexOutOfRange { index: usize, pairs: usize },

    #[error("inadmissible move on pair {pair:?} of {snapshot}: {reason}")]
    InadmissibleMove {
        pair: (u32, u32),
        snapshot: String,
        reason: &'static str,
    },

    #[error("malformed triple: {0}")]
    MalformedTriple(String),

    #[error("bijection invariant broken: {0}")]
    BijectionInvariant(String),

    #[error("shift must be 1 or 2, got {0}")]
    InvalidShift(u32),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("unknown series `{0}`")]
    UnknownSeries(String),

    #[error("{0}")]
    InvalidMultisum(String),
}

pub type Result<T> = std::result::Result<T, Error>;
