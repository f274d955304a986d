use thiserror::Error;

/// Errors produced while constructing or operating on the exact backend.
#[derive(Debug, Error)]
pub enum Error {
    #[error("multiplication table is not a Latin square: row {row} repeats entry {entry}")]
    NotLatinSquare { row: usize, entry: usize },

    #[error("table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },

    #[error("element 0 is not a two-sided identity (fails at element {at})")]
    IdentityNotZero { at: usize },

    #[error("element {x} has no two-sided inverse")]
    NoInverse { x: usize },

    #[error("unknown group family spec {0:?}")]
    UnknownFamily(String),

    #[error("invalid group spec: {0}")]
    InvalidGroupSpec(String),

    #[error("set {{{members:?}}} is not a subgroup of the group: {reason}")]
    NotASubgroup { members: Vec<usize>, reason: String },

    #[error("element id {id} out of range for group of order {order}")]
    ElementOutOfRange { id: usize, order: usize },

    #[error("rho-function must be strictly positive (value at element {at} is not)")]
    RhoNotPositive { at: usize },

    #[error("rho-function violates rho(xh)=rho(x) at x={x}, h={h}")]
    RhoInvalid { x: usize, h: usize },

    #[error("measure is not relatively invariant (rho fails the character identity at x={x}, y={y})")]
    NotRelativelyInvariant { x: usize, y: usize },

    #[error("measure is not G-invariant; the requested operation needs a G-invariant measure")]
    NotGInvariant,

    #[error("functions live on different groups or spaces")]
    DomainMismatch,

    #[error("expected a {expected} coset space")]
    WrongSide { expected: &'static str },

    #[error("function is not in A^1 (not left-H-invariant); the involution is only defined there")]
    NotInA1,

    #[error("p-norm exponent must satisfy p >= 1, got {0}")]
    BadExponent(f64),

    #[error("value length {got} does not match expected {expected}")]
    LengthMismatch { got: usize, expected: usize },

    #[error("cannot parse rational {0:?}")]
    BadRational(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    #[error("sphere grid bandwidth must be in 1..=16, got {0}")]
    BadBandwidth(usize),

    #[error("sphere grids are incompatible")]
    GridMismatch,

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
