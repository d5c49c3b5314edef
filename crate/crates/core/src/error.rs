use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index must have at least one part")]
    EmptyIndex,
    #[error("index parts must be positive, found {0}")]
    NonPositivePart(u32),
    #[error("cannot parse `{0}` as a comma-separated list of positive integers")]
    ParseIndex(String),
    #[error("cannot parse `{0}` as a word over x and y")]
    ParseWord(String),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("cannot choose {ones} ones among {len} positions")]
    TooManyOnes { len: usize, ones: usize },
    #[error("support position {position} is outside 0..{len}")]
    SupportOutOfRange { position: usize, len: usize },
    #[error("word `{0}` does not end in y")]
    NotAdmissible(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("{0} is outside the supported modulus range")]
    ModulusOutOfRange(u64),
    #[error("{0} has no inverse modulo {1}")]
    NotInvertible(u64, u64),
    #[error("Bernoulli index requires 2 <= k <= p - 2 (k = {k}, p = {p})")]
    BernoulliRange { k: u64, p: u64 },
    #[error("invalid prime window: {0}")]
    InvalidWindow(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
