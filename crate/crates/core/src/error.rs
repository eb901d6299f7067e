use thiserror::Error;

/// Errors raised by the lattice discretization machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} outside stored range 0..{len}")]
    IndexOutOfRange { index: i64, len: usize },

    #[error("sequence lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("stencil constraint violated: {0}")]
    ConstraintViolation(String),

    #[error("not a delta operator: {0}")]
    NotADeltaOperator(String),

    #[error("series is not invertible under composition (zero linear coefficient)")]
    NotInvertible,

    #[error("star power of arity zero requested; use the unit sequence instead")]
    ArityZero,

    #[error("difference order {order} exceeds sequence length {len}")]
    OrderTooLarge { order: usize, len: usize },

    #[error("recurrence is not forward solvable: leading coefficient vanishes at t = 0")]
    NotForwardSolvable,

    #[error("fundamental system is singular (modified Wronskian vanishes)")]
    SingularSystem,

    #[error("Pochhammer symbol ({0})_k has a zero in the summation range")]
    PochhammerPole(String),

    #[error("Gamma function pole at argument {0}")]
    GammaPole(String),

    #[error("closed-form solution is singular at t = 0")]
    SingularAtOrigin,

    #[error("cannot parse rational from {0:?}")]
    RationalParse(String),

    #[error("invalid equation: {0}")]
    InvalidEquation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
