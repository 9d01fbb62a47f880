use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base {0} out of range (expected 2..=36)")]
    InvalidBase(u32),
    #[error("digit {digit} out of range for base {base}")]
    DigitOutOfRange { digit: u8, base: u8 },
    #[error("cannot parse {0:?} as a number")]
    Parse(String),
    #[error("operands use different bases ({0} and {1})")]
    MixedBase(u8, u8),
    #[error("value does not fit in u64")]
    Overflow,
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("digit map image must be nondecreasing")]
    MapNotMonotone,
    #[error("budget exceeded: {0}")]
    Budget(String),
}

pub type Result<T> = std::result::Result<T, Error>;
