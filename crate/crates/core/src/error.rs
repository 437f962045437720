use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),

    #[error("invalid element for {ring}: {detail}")]
    InvalidElement { ring: String, detail: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("ring {0} is infinite")]
    InfiniteRing(String),

    #[error("rank must be at least 1")]
    ZeroRank,

    #[error("no identity element: {0}")]
    NoUnit(String),

    #[error("not associative: (e{0} e{1}) e{2} != e{0} (e{1} e{2})")]
    NotAssociative(usize, usize, usize),

    #[error("unsupported homomorphism {from} -> {to}")]
    UnsupportedHom { from: String, to: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("search space of {size} exceeds limit {limit}")]
    LimitExceeded { size: u128, limit: u128 },

    #[error("unknown corpus entry {0:?}")]
    UnknownEntry(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
