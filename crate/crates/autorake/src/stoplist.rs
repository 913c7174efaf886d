//! Stoplists: generated from corpus statistics or loaded from a file.
//!
//! The generator keeps every word whose observed spread across documents is
//! at least as wide as random scatter would predict (randomness ratio below
//! the threshold) and that occurs in enough documents for the comparison to
//! mean anything. The resulting set is exactly the phrase-breaking input
//! RAKE needs, derived from the corpus itself instead of a hand-curated
//! list.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::model::{randomness_ratio, OccurrenceModel};
use crate::stats::TermStatsTable;
use crate::tokenize::normalize;

/// Selection rule for [`generate_stoplist`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StoplistConfig {
    /// A word is a stopword when expected df / observed df falls below this.
    pub threshold: f64,
    /// ... and it occurs in at least this many documents. Words rarer than
    /// this are too noisy to classify either way.
    pub min_df: u64,
}

impl Default for StoplistConfig {
    fn default() -> Self {
        Self {
            threshold: 1.6,
            min_df: 11,
        }
    }
}

impl StoplistConfig {
    fn validate(&self) -> Result<()> {
        if !(self.threshold.is_finite() && self.threshold > 0.0) {
            return Err(Error::InvalidStoplistConfig {
                reason: format!("threshold must be positive and finite, got {}", self.threshold),
            });
        }
        Ok(())
    }
}

/// Where a stoplist came from; written into the file header on save.
#[derive(Debug, Clone, PartialEq)]
pub enum Provenance {
    Generated {
        threshold: f64,
        min_df: u64,
        model: String,
        doc_count: u64,
        vocab_size: usize,
    },
    External {
        source: String,
    },
}

/// A set of normalized words that break candidate phrases.
#[derive(Debug, Clone, PartialEq)]
pub struct Stoplist {
    words: BTreeSet<String>,
    provenance: Provenance,
}

impl Stoplist {
    /// A stoplist with no words: extraction degenerates to splitting on
    /// delimiters only.
    pub fn empty() -> Self {
        Self {
            words: BTreeSet::new(),
            provenance: Provenance::External {
                source: "empty".to_string(),
            },
        }
    }

    /// Build from explicit words (normalized on the way in).
    pub fn from_words<I, S>(words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Self {
            words: words.into_iter().map(|w| normalize(w.as_ref())).collect(),
            provenance: Provenance::External {
                source: "inline".to_string(),
            },
        }
    }

    pub fn contains(&self, normal: &str) -> bool {
        self.words.contains(normal)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Words in lexicographic order.
    pub fn words(&self) -> impl Iterator<Item = &str> {
        self.words.iter().map(String::as_str)
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }
}

/// Select stopwords from a stats table: every word with
/// `randomness_ratio < config.threshold` and `df >= config.min_df`.
/// The model must have been built for the same corpus size as the table.
pub fn generate_stoplist(
    table: &TermStatsTable,
    model: &OccurrenceModel,
    config: &StoplistConfig,
) -> Result<Stoplist> {
    config.validate()?;
    if model.doc_count() != table.doc_count() {
        return Err(Error::DocCountMismatch {
            model_docs: model.doc_count(),
            table_docs: table.doc_count(),
        });
    }

    let mut words = BTreeSet::new();
    for (word, stats) in table.entries() {
        if stats.doc_freq < config.min_df {
            continue;
        }
        if randomness_ratio(stats, model)? < config.threshold {
            words.insert(word.to_string());
        }
    }

    Ok(Stoplist {
        words,
        provenance: Provenance::Generated {
            threshold: config.threshold,
            min_df: config.min_df,
            model: model.kind().to_string(),
            doc_count: table.doc_count(),
            vocab_size: table.vocab_size(),
        },
    })
}

/// Render a stoplist to its file form: a `#` comment header recording
/// provenance, then one word per line, lexicographically sorted, LF endings.
pub fn render_stoplist(stoplist: &Stoplist) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# stoplist: {} words", stoplist.len());
    match stoplist.provenance() {
        Provenance::Generated {
            threshold,
            min_df,
            model,
            doc_count,
            vocab_size,
        } => {
            let _ = writeln!(out, "# source: generated");
            let _ = writeln!(out, "# model: {model}");
            let _ = writeln!(out, "# threshold: {threshold}");
            let _ = writeln!(out, "# min-df: {min_df}");
            let _ = writeln!(out, "# corpus: {doc_count} documents, {vocab_size} distinct words");
        }
        Provenance::External { source } => {
            let _ = writeln!(out, "# source: external ({source})");
        }
    }
    for word in stoplist.words() {
        let _ = writeln!(out, "{word}");
    }
    out
}

pub fn save_stoplist(stoplist: &Stoplist, path: &Path) -> Result<()> {
    std::fs::write(path, render_stoplist(stoplist)).map_err(|e| Error::Write {
        path: path.to_path_buf(),
        source: e,
    })
}

/// A loaded stoplist plus how many duplicate entries were collapsed.
#[derive(Debug)]
pub struct StoplistLoad {
    pub stoplist: Stoplist,
    pub duplicates: usize,
}

/// Load a stoplist file: `#` comments and blank lines are ignored, every
/// other line must be a single word (no embedded whitespace — rejected with
/// its line number otherwise). Words are normalized; duplicates collapse
/// into the set and are counted in the result.
pub fn load_stoplist(path: &Path) -> Result<StoplistLoad> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Read {
        path: path.to_path_buf(),
        source: e,
    })?;

    let mut words = BTreeSet::new();
    let mut duplicates = 0;
    for (index, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if trimmed.chars().any(char::is_whitespace) {
            return Err(Error::MalformedStoplistEntry {
                path: path.to_path_buf(),
                line: index + 1,
            });
        }
        if !words.insert(normalize(trimmed)) {
            duplicates += 1;
        }
    }

    Ok(StoplistLoad {
        stoplist: Stoplist {
            words,
            provenance: Provenance::External {
                source: path.display().to_string(),
            },
        },
        duplicates,
    })
}
