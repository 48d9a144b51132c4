use std::path::PathBuf;

/// Failures of the harness layer: IO, formats, and core errors passed through.
#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad matrix: {0}")]
    Format(String),
    #[error(transparent)]
    Core(#[from] tripotent_core::Error),
}

pub type Result<T> = std::result::Result<T, HarnessError>;
