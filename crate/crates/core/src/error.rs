use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Which of the dual-certificate sign conditions failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignCondition {
    /// A Krawtchouk coefficient `f_i` is negative.
    NegativeCoefficient,
    /// `f(x)` is not strictly positive for some `x < w`.
    NotPositiveBelowDistance,
    /// `f(x)` is positive for some `x >= w`.
    PositiveFromDistance,
}

impl fmt::Display for SignCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignCondition::NegativeCoefficient => "f_i >= 0",
            SignCondition::NotPositiveBelowDistance => "f(x) > 0 for x < w",
            SignCondition::PositiveFromDistance => "f(x) <= 0 for x >= w",
        })
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("binomial coefficient with negative upper argument {0}")]
    NegativeBinomial(i64),
    #[error("alphabet size {0} is not supported (expected 2 or 4)")]
    UnsupportedAlphabet(u32),
    #[error("index {index} out of range 0..={max}")]
    OutOfRange { index: usize, max: usize },
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(&'static str),
    #[error("sign condition `{condition}` violated at index {index}")]
    SignViolation { condition: SignCondition, index: usize },
    #[error("coefficient f_{index} is zero while f({index}) > 0; the bound is unbounded")]
    ZeroDenominator { index: usize },
    #[error("no rational evaluation point passed exact verification")]
    NoValidA,
    #[error("no sign change found on the search interval")]
    NoSignChange,
    #[error("{0} sign changes found where exactly one root was expected")]
    MultipleRoots(usize),
    #[error("argument outside the domain: {0}")]
    Domain(&'static str),
    #[error("unknown curve `{0}`")]
    UnknownCurve(alloc::string::String),
    #[error("empty range")]
    EmptyRange,
}
