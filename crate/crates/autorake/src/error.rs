//! Error type shared across the crate.

use std::io;
use std::path::PathBuf;

use thiserror::Error;

/// Everything that can go wrong between raw input files and finished reports.
#[derive(Debug, Error)]
pub enum Error {
    #[error("failed to read {path}: {source}")]
    Read {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("failed to write {path}: {source}")]
    Write {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("no documents found in {path}")]
    NoDocuments { path: PathBuf },

    #[error("duplicate document id `{doc_id}`")]
    DuplicateDocId { doc_id: String },

    #[error("corpus must contain at least one document")]
    EmptyCorpus,

    #[error("invalid stats for `{word}`: cf={collection_freq}, df={doc_freq}, docs={doc_count} (need 1 <= df <= cf and df <= docs)")]
    InvalidTermStats {
        word: String,
        collection_freq: u64,
        doc_freq: u64,
        doc_count: u64,
    },

    #[error("duplicate term `{word}` in stats table")]
    DuplicateTerm { word: String },

    #[error("collection frequency must be non-negative, got {cf}")]
    NegativeCollectionFreq { cf: f64 },

    #[error("dispersion parameter r must be positive and finite, got {r}")]
    InvalidDispersion { r: f64 },

    #[error("randomness ratio needs an observed document frequency of at least 1")]
    ZeroDocFreq,

    #[error("cannot fit a dispersion parameter to an empty stats table")]
    EmptyTermTable,

    #[error("model was built for {model_docs} documents but the stats table covers {table_docs}")]
    DocCountMismatch { model_docs: u64, table_docs: u64 },

    #[error("invalid stoplist config: {reason}")]
    InvalidStoplistConfig { reason: String },

    #[error("{path}:{line}: stoplist entries must be single words without embedded whitespace")]
    MalformedStoplistEntry { path: PathBuf, line: usize },

    #[error("failed to parse config {path}: {reason}")]
    Config { path: PathBuf, reason: String },

    #[error("output failed: {0}")]
    Io(#[from] io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
