use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("subtraction set is empty")]
    EmptySet,
    #[error("subtraction set elements must be positive, got 0")]
    ZeroElement,
    #[error("duplicate element {0} in subtraction set")]
    DuplicateElement(u32),
    #[error("sequence length must be at least 1")]
    ZeroLength,
    #[error("period window must be at least 1")]
    ZeroWindow,
    #[error("sequence of length {len} is too short, need at least {needed}")]
    SequenceTooShort { len: usize, needed: usize },
    #[error("no period certificate found within horizon cap {cap}")]
    NoCertificate { cap: usize },
    #[error("horizon cap {cap} is below the starting horizon {start}")]
    HorizonCapTooSmall { cap: usize, start: usize },
    #[error("parameter outside the {family} domain: {reason}")]
    Domain { family: &'static str, reason: String },
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("redundancy analysis needs at least two elements")]
    SingletonSet,
}
