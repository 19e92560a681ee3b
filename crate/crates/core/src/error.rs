use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree {requested} exceeds the degree cap {cap}")]
    DegreeCap { requested: usize, cap: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("no rectangles: the empty partition has no rectangle decomposition")]
    NoRectangles,

    #[error("partition {0} is not rectangular")]
    NotRectangular(String),

    #[error("constant term is not the unit")]
    NonUnit,

    #[error("need lambda values up to degree {needed}, got {given}")]
    InsufficientValues { needed: usize, given: usize },

    #[error("element is not a line element")]
    NotALine,

    #[error("no rational function within the given degree bounds")]
    NoSolution,

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_cap(requested: usize, cap: usize) -> Result<()> {
    if requested > cap {
        Err(Error::DegreeCap { requested, cap })
    } else {
        Ok(())
    }
}
