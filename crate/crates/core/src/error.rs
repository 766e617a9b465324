use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0}")]
    Domain(String),
    #[error("incomposable word at token {position}: {detail}")]
    Incomposable { position: usize, detail: String },
    #[error("weight mismatch: {0}")]
    WeightMismatch(String),
    #[error("quiver file: field `{field}`: {detail}")]
    QuiverFile { field: String, detail: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("module relation violated: {0}")]
    Relation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
