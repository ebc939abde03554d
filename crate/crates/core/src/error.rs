use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("duplicate point `{0}`")]
    DuplicatePoint(String),
    #[error("{what} has size {size}, bound is {bound}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },
    #[error("not a semitopology: {0}")]
    NotSemitopology(String),
    #[error("invalid witness function: {0}")]
    InvalidWitness(String),
    #[error("invalid semiframe: {0}")]
    InvalidSemiframe(String),
    #[error("invalid semifilter: {0}")]
    InvalidSemifilter(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("free variable `{0}`")]
    FreeVariable(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("not a Horn clause: {0}")]
    NotHorn(String),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub(crate) fn check_bound(what: &'static str, size: usize, bound: usize) -> Result<()> {
    if size > bound {
        Err(Error::BoundExceeded { what, size, bound })
    } else {
        Ok(())
    }
}
