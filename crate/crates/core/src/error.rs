use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An operation that needs `f(0) = 0` was handed a series with a constant term.
    #[error("series has a nonzero constant term")]
    NonzeroConstantTerm,

    /// An exact division left a remainder. This is always a logic error upstream.
    #[error("coefficient of x^{exponent} is not divisible by {divisor}")]
    InexactDivision { exponent: usize, divisor: String },

    #[error("a power series needs at least one coefficient")]
    EmptySeries,

    #[error("exponent scale must be at least 1")]
    ZeroScale,

    #[error("tree counts start at n = 1; order {0} requested")]
    InvalidOrder(usize),

    #[error("n = {n} exceeds the enumeration cap of {cap} vertices (raise it with --cap)")]
    CapExceeded { n: usize, cap: usize },

    #[error("input graph is not a tree: {0}")]
    NotATree(String),

    #[error("{0}")]
    Unsupported(String),

    #[error("malformed b-file line {line}: {reason}")]
    MalformedBFile { line: usize, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
