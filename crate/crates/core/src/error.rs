use thiserror::Error;

/// Errors raised by the toolkit.
///
/// Variants separate malformed input (`Parse`), violated preconditions on
/// otherwise well-formed input, and searches that stopped at a caller-supplied
/// limit without reaching a determination.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },

    #[error("self-loop at vertex {0}; graphs must be simple")]
    SelfLoop(usize),

    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("divisor has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("divisor is not effective")]
    NotEffective,

    #[error("divisors are not linearly equivalent")]
    NotEquivalent,

    #[error("divisors have different degrees ({0} and {1})")]
    DegreeMismatch(i64, i64),

    #[error("vertex set must be non-empty")]
    EmptySet,

    #[error("vertex {0} is not universal")]
    NotUniversal(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("instance too large: {found} vertices exceeds the limit of {limit}")]
    TooLarge { found: usize, limit: usize },

    #[error("no positive-rank divisor of degree at most {budget}; gonality unknown above budget")]
    BudgetExhausted { budget: usize },

    #[error("chain invariant violated at step {step}: intermediate divisor is not effective")]
    ChainNotEffective { step: usize },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
