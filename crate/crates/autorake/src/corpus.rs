//! Document ingestion: a corpus is an ordered, id-keyed collection of texts.
//!
//! Two source layouts are supported: a directory tree of text files (one
//! document per file, ids are the relative paths) and a single file with one
//! document per line (ids are `rec-<index>`). Documents are always held
//! sorted by id so every downstream artifact is byte-reproducible no matter
//! how the filesystem or input happened to be ordered.

use std::path::Path;

use serde::Deserialize;
use walkdir::WalkDir;

use crate::error::{Error, Result};

/// One input text with its stable identifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub doc_id: String,
    pub text: String,
}

impl Document {
    pub fn new(doc_id: impl Into<String>, text: impl Into<String>) -> Self {
        Self {
            doc_id: doc_id.into(),
            text: text.into(),
        }
    }
}

/// An immutable set of documents, sorted by id, ids unique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    documents: Vec<Document>,
}

impl Corpus {
    /// Sorts by `doc_id` and rejects duplicates.
    pub fn new(mut documents: Vec<Document>) -> Result<Self> {
        documents.sort_by(|a, b| a.doc_id.cmp(&b.doc_id));
        for pair in documents.windows(2) {
            if pair[0].doc_id == pair[1].doc_id {
                return Err(Error::DuplicateDocId {
                    doc_id: pair[0].doc_id.clone(),
                });
            }
        }
        Ok(Self { documents })
    }

    pub fn doc_count(&self) -> u64 {
        self.documents.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.documents.is_empty()
    }

    pub fn documents(&self) -> &[Document] {
        &self.documents
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Document> {
        self.documents.iter()
    }
}

impl<'a> IntoIterator for &'a Corpus {
    type Item = &'a Document;
    type IntoIter = std::slice::Iter<'a, Document>;

    fn into_iter(self) -> Self::IntoIter {
        self.documents.iter()
    }
}

/// Knobs for [`load_corpus`].
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct IngestionConfig {
    /// File extensions picked up when loading a directory (without dots,
    /// matched case-insensitively).
    pub extensions: Vec<String>,
}

impl Default for IngestionConfig {
    fn default() -> Self {
        Self {
            extensions: vec!["txt".to_string()],
        }
    }
}

/// A document that was found but could not be ingested.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkippedDocument {
    pub doc_id: String,
    pub reason: String,
}

/// What [`load_corpus`] produced: the usable documents plus a report of
/// everything that was found but dropped.
#[derive(Debug)]
pub struct LoadOutcome {
    pub corpus: Corpus,
    pub skipped: Vec<SkippedDocument>,
}

/// Load documents from `source`: a directory of text files or a single
/// file with one document per line. Fails with [`Error::NoDocuments`] when
/// the source yields no candidate documents at all; individually unreadable
/// documents are skipped and reported in the outcome instead.
pub fn load_corpus(source: &Path, config: &IngestionConfig) -> Result<LoadOutcome> {
    if source.is_dir() {
        load_directory(source, config)
    } else if source.is_file() {
        load_lines(source)
    } else {
        Err(Error::Read {
            path: source.to_path_buf(),
            source: std::io::Error::new(
                std::io::ErrorKind::NotFound,
                "not a file or directory",
            ),
        })
    }
}

fn extension_matches(path: &Path, extensions: &[String]) -> bool {
    let Some(ext) = path.extension().and_then(|e| e.to_str()) else {
        return false;
    };
    extensions.iter().any(|e| e.eq_ignore_ascii_case(ext))
}

fn load_directory(dir: &Path, config: &IngestionConfig) -> Result<LoadOutcome> {
    let mut documents = Vec::new();
    let mut skipped = Vec::new();
    let mut found_any = false;

    for entry in WalkDir::new(dir).sort_by_file_name() {
        let entry = entry.map_err(|e| Error::Read {
            path: e.path().map_or_else(|| dir.to_path_buf(), Path::to_path_buf),
            source: e.into_io_error().unwrap_or_else(|| {
                std::io::Error::other("walk failed")
            }),
        })?;
        if !entry.file_type().is_file() || !extension_matches(entry.path(), &config.extensions) {
            continue;
        }
        found_any = true;
        let doc_id = entry
            .path()
            .strip_prefix(dir)
            .unwrap_or(entry.path())
            .to_string_lossy()
            .replace(std::path::MAIN_SEPARATOR, "/");
        let bytes = std::fs::read(entry.path()).map_err(|e| Error::Read {
            path: entry.path().to_path_buf(),
            source: e,
        })?;
        match String::from_utf8(bytes) {
            Ok(text) => documents.push(Document::new(doc_id, text)),
            Err(e) => skipped.push(SkippedDocument {
                doc_id,
                reason: format!("invalid UTF-8: {}", e.utf8_error()),
            }),
        }
    }

    if !found_any {
        return Err(Error::NoDocuments {
            path: dir.to_path_buf(),
        });
    }
    Ok(LoadOutcome {
        corpus: Corpus::new(documents)?,
        skipped,
    })
}

fn load_lines(file: &Path) -> Result<LoadOutcome> {
    let bytes = std::fs::read(file).map_err(|e| Error::Read {
        path: file.to_path_buf(),
        source: e,
    })?;

    let mut records: Vec<&[u8]> = bytes.split(|&b| b == b'\n').collect();
    // A trailing newline terminates the last record rather than opening an
    // empty one.
    if records.last().is_some_and(|r| r.is_empty()) {
        records.pop();
    }
    if records.is_empty() {
        return Err(Error::NoDocuments {
            path: file.to_path_buf(),
        });
    }

    // Ids are zero-padded so that lexicographic order equals record order.
    let width = (records.len() - 1).to_string().len();
    let mut documents = Vec::new();
    let mut skipped = Vec::new();
    for (index, mut record) in records.into_iter().enumerate() {
        if record.last() == Some(&b'\r') {
            record = &record[..record.len() - 1];
        }
        let doc_id = format!("rec-{index:0width$}");
        match std::str::from_utf8(record) {
            Ok(text) => documents.push(Document::new(doc_id, text)),
            Err(e) => skipped.push(SkippedDocument {
                doc_id,
                reason: format!("invalid UTF-8: {e}"),
            }),
        }
    }

    Ok(LoadOutcome {
        corpus: Corpus::new(documents)?,
        skipped,
    })
}
