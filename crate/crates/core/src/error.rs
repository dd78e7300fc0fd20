use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid atom name `{0}`")]
    InvalidAtomName(String),
    #[error("alphabet has {0} atoms; at most 16 are supported")]
    AlphabetTooLarge(usize),
    #[error("atom `{0}` is not in the alphabet")]
    UnknownAtom(String),
    #[error("operands are over different alphabets")]
    AlphabetMismatch,
    #[error("here-world is not a subset of the there-world")]
    NotSeInterpretation,
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("SE set is not {0}")]
    Precondition(&'static str),
    #[error("program is not in class {expected} (it is {found})")]
    ClassMismatch {
        expected: &'static str,
        found: &'static str,
    },
    #[error("selection function violates its invariant at Y = {y}: {message}")]
    Selection { y: String, message: String },
    #[error("assignment violates condition ({condition}): {detail}")]
    Assignment { condition: String, detail: String },
    #[error("extracted relation is not a total preorder: {0}")]
    Extraction(String),
    #[error("invalid operator spec `{0}`")]
    InvalidOperator(String),
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
