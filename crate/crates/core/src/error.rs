use thiserror::Error;

use crate::monomial::Monomial;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator set")]
    Empty,

    #[error("exponent overflow")]
    Overflow,

    #[error("ideal contains no pure power of {0}")]
    MissingPurePower(char),

    #[error("generator {m} lies below the line through ({a},0) and (0,{b})")]
    NotInFrame { a: u64, b: u64, m: Monomial },

    #[error("point {p} is not in D_({a},{b})")]
    NotInD { a: u64, b: u64, p: Monomial },

    #[error("ideal is not quasi-equigenerated in frame ({a},{b})")]
    NotEquigenerated { a: u64, b: u64 },

    #[error("frame ({a},{b}) has gcd {gcd}, exponent set has g = {g}")]
    FrameMismatch { a: u64, b: u64, gcd: u64, g: u64 },

    #[error("invalid exponent set: {0}")]
    InvalidSet(String),

    #[error("{0}")]
    OutOfRange(String),

    #[error("no stabilization within cap {cap}")]
    CapExceeded { cap: u64 },

    #[error("ideal equals its reduction (x^{a}, y^{b})")]
    TrivialIdeal { a: u64, b: u64 },

    #[error("oracle grid has {0} points, limit is {1}")]
    GridTooLarge(usize, usize),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True for malformed input text, as opposed to well-formed input the
    /// math rejects.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::InvalidSet(_))
    }
}
