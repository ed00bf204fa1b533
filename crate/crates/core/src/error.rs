use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet of {r} letters exceeds the supported maximum of {max}")]
    AlphabetTooLarge { r: usize, max: usize },
    #[error("alphabet mismatch: expected {expected} letters, found {found}")]
    AlphabetMismatch { expected: usize, found: usize },
    #[error("permutation rank {rank} out of range for {count} permutations")]
    RankOutOfRange { rank: usize, count: usize },
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("sequence must be nonempty")]
    EmptySequence,
    #[error("malformed bit string {0:?}")]
    MalformedBits(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid letter {0:?}")]
    InvalidLetter(char),
    #[error("algorithms disagree on {sequence}: {detail}")]
    Mismatch { sequence: String, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
