use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot map to group")]
    CannotMapToGroup,

    #[error("length mismatch: {0} != {1}")]
    LengthMismatch(usize, usize),

    #[error("empty input")]
    EmptyInput,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("witness out of range")]
    WitnessOutOfRange,

    #[error("not a member")]
    NotAMember,

    #[error("unsignable message")]
    UnsignableMessage,

    #[error("b must be a power of 2")]
    NotPowerOfTwo,

    #[error("negative input")]
    NegativeInput,

    #[error("malformed encoding: {0}")]
    Malformed(&'static str),

    #[error("iteration limit exceeded in {0}")]
    IterationLimit(&'static str),

    #[error("honest proof failed to verify: {0}")]
    VerificationFailed(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
