use crate::scalars::MAX_RANK;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator factor {0} vanishes under substitution")]
    VanishingDenominator(String),
    #[error("unknown Cartan type {0:?} (expected A, B, C, D or G)")]
    UnknownCartanType(String),
    #[error("unsupported root datum {label}{rank}")]
    UnsupportedType { label: String, rank: usize },
    #[error("rank {0} exceeds the maximum supported rank {MAX_RANK}")]
    RankTooLarge(usize),
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("Weyl group has more than {cap} elements")]
    CapExceeded { cap: usize },
    #[error("{0:?} is not a root")]
    NotARoot(Vec<i32>),
    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("malformed word {word:?}: {reason}")]
    MalformedWord { word: String, reason: String },
    #[error("{w} is not below {v} in the Bruhat order")]
    NotComparable { w: String, v: String },
}
