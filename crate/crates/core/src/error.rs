use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("divergent series: {0}")]
    Divergent(String),
    #[error("precision error: requested {requested} digits, achieved {achieved}")]
    Precision { requested: u32, achieved: u32 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("arity error: need {needed} values, got {got}")]
    Arity { needed: usize, got: usize },
    #[error("parameter error: {0}")]
    Parameter(String),
    #[error("unresolved atom {0}")]
    UnresolvedAtom(String),
    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
