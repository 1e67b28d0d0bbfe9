use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right} variables")]
    Dimension { left: usize, right: usize },

    #[error("the family does not generate an m-primary ideal (missing pure power of X{missing})")]
    NotPrimary { missing: usize },

    #[error("at least two generators are required, got {0}")]
    TooFewGenerators(usize),

    #[error("brute-force oracle limited to {max} generators, got {n}")]
    OracleTooLarge { n: usize, max: usize },

    #[error("no semistable family of {n} monomials of degree {d} exists on P^1: {d} is not a multiple of {}", .n - 1)]
    NoFamilyExists { d: u32, n: usize },

    #[error("(N, d, n) = ({nvars}, {d}, {n}) is outside the admissible range: {reason}")]
    OutOfRange {
        nvars: usize,
        d: u32,
        n: usize,
        reason: String,
    },

    #[error("search exhausted without a certified family for (N, d, n) = ({nvars}, {d}, {n})")]
    SearchExhausted { nvars: usize, d: u32, n: usize },

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal consistency error: {0}")]
    Internal(String),
}
