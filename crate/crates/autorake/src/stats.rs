//! Per-word corpus statistics: collection frequency and document frequency.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::corpus::Corpus;
use crate::error::{Error, Result};
use crate::tokenize::{tokenize, TokenizerConfig};

/// Counts for one normalized word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TermStats {
    /// Total number of occurrences across the whole corpus.
    pub collection_freq: u64,
    /// Number of distinct documents the word occurs in.
    pub doc_freq: u64,
}

/// The full vocabulary with its counts, keyed by normalized word, plus the
/// size of the corpus it was computed from. Upholds `1 <= df <= cf` and
/// `df <= doc_count` for every entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermStatsTable {
    entries: BTreeMap<String, TermStats>,
    doc_count: u64,
}

impl TermStatsTable {
    /// Build a table from raw `(word, cf, df)` rows, validating the count
    /// invariants. Useful for loading externally computed statistics.
    pub fn from_entries(
        doc_count: u64,
        rows: impl IntoIterator<Item = (String, u64, u64)>,
    ) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (word, collection_freq, doc_freq) in rows {
            if doc_freq < 1 || doc_freq > collection_freq || doc_freq > doc_count {
                return Err(Error::InvalidTermStats {
                    word,
                    collection_freq,
                    doc_freq,
                    doc_count,
                });
            }
            let stats = TermStats {
                collection_freq,
                doc_freq,
            };
            if entries.insert(word.clone(), stats).is_some() {
                return Err(Error::DuplicateTerm { word });
            }
        }
        Ok(Self { entries, doc_count })
    }

    pub fn doc_count(&self) -> u64 {
        self.doc_count
    }

    pub fn vocab_size(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, word: &str) -> Option<&TermStats> {
        self.entries.get(word)
    }

    /// Entries in lexicographic word order.
    pub fn entries(&self) -> impl Iterator<Item = (&str, &TermStats)> {
        self.entries.iter().map(|(w, s)| (w.as_str(), s))
    }

    /// Total token count over the corpus (sum of collection frequencies).
    pub fn total_tokens(&self) -> u64 {
        self.entries.values().map(|s| s.collection_freq).sum()
    }

    pub fn max_collection_freq(&self) -> u64 {
        self.entries
            .values()
            .map(|s| s.collection_freq)
            .max()
            .unwrap_or(0)
    }
}

/// Tokenize every document and tally cf/df per normalized word. Total over
/// all inputs: an empty corpus gives an empty table.
pub fn compute_term_stats(corpus: &Corpus, config: &TokenizerConfig) -> TermStatsTable {
    let per_doc: Vec<HashMap<String, u64>> = corpus
        .documents()
        .par_iter()
        .map(|doc| {
            let mut counts = HashMap::new();
            for word in tokenize(&doc.text, config).words() {
                *counts.entry(word.normal.clone()).or_insert(0) += 1;
            }
            counts
        })
        .collect();

    // Merging is a commutative sum, so the per-document hash order cannot
    // leak into the result; the BTreeMap fixes the final ordering.
    let mut entries: BTreeMap<String, TermStats> = BTreeMap::new();
    for counts in per_doc {
        for (word, occurrences) in counts {
            let entry = entries.entry(word).or_insert(TermStats {
                collection_freq: 0,
                doc_freq: 0,
            });
            entry.collection_freq += occurrences;
            entry.doc_freq += 1;
        }
    }

    TermStatsTable {
        entries,
        doc_count: corpus.doc_count(),
    }
}
