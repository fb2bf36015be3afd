use thiserror::Error;

/// Errors produced by the constructors and algorithms of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier size must be at least 1")]
    EmptyCarrier,

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("element {element} is outside X_{n}")]
    OutOfRange { element: usize, n: usize },

    #[error("invalid operation table: {0}")]
    InvalidTable(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid weak ordering: {0}")]
    InvalidWeakOrdering(String),

    #[error("invalid total ordering: {0}")]
    InvalidTotalOrdering(String),

    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("invalid preimage sequence: {0}")]
    InvalidPreimage(String),

    #[error("operation is not an associative quasitrivial operation")]
    NotAMember,

    #[error("preimage sequence {0:?} is not realizable")]
    Unrealizable(Vec<usize>),

    #[error("weak ordering is not 2-quasilinear: {a} < {b} ~ {c} ~ {d}")]
    NotTwoQuasilinear { a: usize, b: usize, c: usize, d: usize },

    #[error("n = {n} exceeds the {guard} guard (max {max})")]
    GuardExceeded { guard: &'static str, n: usize, max: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
