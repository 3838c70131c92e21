use std::path::PathBuf;

use thiserror::Error;

/// Errors surfaced by corpus handling, model IO, and training.
#[derive(Debug, Error)]
pub enum Error {
    #[error("failed to read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed resource file {path}: {reason}")]
    Resource { path: PathBuf, reason: String },

    #[error("cannot build document frequency table from an empty corpus")]
    EmptyCorpus,

    #[error("unrecognized model file: expected {expected}, found {found}")]
    ModelFormat { expected: String, found: String },

    #[error("failed to parse model file: {0}")]
    ModelParse(#[from] serde_json::Error),

    #[error("KEA training found no positive examples (no candidate matched a gold keyphrase)")]
    NoPositiveExamples,

    #[error("split sizes exceed corpus: requested test={test} + validation={validation} but only {available} records")]
    SplitTooLarge {
        test: usize,
        validation: usize,
        available: usize,
    },

    #[error("unknown extraction method `{0}`, valid methods: {1}")]
    UnknownMethod(String, String),

    #[error("method `{method}` requires {requirement}")]
    MissingDependency { method: String, requirement: String },
}

pub type Result<T> = std::result::Result<T, Error>;
