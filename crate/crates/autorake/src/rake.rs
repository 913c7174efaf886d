//! RAKE keyword extraction: candidate phrases, the word co-occurrence
//! graph, and degree/frequency scoring.
//!
//! A candidate phrase is a maximal run of non-stopword words uninterrupted
//! by delimiters. Every word occurrence inside a candidate of length `L`
//! contributes 1 to its frequency and `L` to its degree (the word co-occurs
//! with the other `L - 1` members and with itself), so a word's
//! `deg/freq` score is its average hosting-phrase length — words that live
//! in long phrases outscore words of the same frequency that stand alone.
//! A phrase scores the sum of its members' word scores. Candidates are
//! never merged across delimiters, and the graph is built per document.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::corpus::{Corpus, Document};
use crate::stoplist::Stoplist;
use crate::tokenize::{tokenize, Item, TokenStream, TokenizerConfig, Word};

/// A maximal non-stopword word run from one document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidatePhrase {
    pub words: Vec<Word>,
    pub doc_id: String,
    /// Index into the token stream's items of the phrase's first word.
    pub position: usize,
}

impl CandidatePhrase {
    pub fn token_count(&self) -> usize {
        self.words.len()
    }

    /// Space-joined normalized forms; the identity used for deduplication.
    pub fn normal_key(&self) -> String {
        let normals: Vec<&str> = self.words.iter().map(|w| w.normal.as_str()).collect();
        normals.join(" ")
    }

    /// Space-joined surface forms as they appeared in the text.
    pub fn surface(&self) -> String {
        let surfaces: Vec<&str> = self.words.iter().map(|w| w.surface.as_str()).collect();
        surfaces.join(" ")
    }
}

/// Word frequency and degree tallies over a set of candidates.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CooccurrenceGraph {
    freq: BTreeMap<String, u64>,
    deg: BTreeMap<String, u64>,
}

impl CooccurrenceGraph {
    /// Occurrences of `normal` across all candidates.
    pub fn freq(&self, normal: &str) -> u64 {
        self.freq.get(normal).copied().unwrap_or(0)
    }

    /// Self-inclusive degree: sum of hosting-candidate lengths over all
    /// occurrences of `normal`. Always at least `freq`.
    pub fn deg(&self, normal: &str) -> u64 {
        self.deg.get(normal).copied().unwrap_or(0)
    }

    /// `deg/freq` for a word that occurs in the candidates; 0 otherwise.
    pub fn word_score(&self, normal: &str) -> f64 {
        match self.freq(normal) {
            0 => 0.0,
            freq => self.deg(normal) as f64 / freq as f64,
        }
    }

    /// Normalized words present in the graph, lexicographically.
    pub fn words(&self) -> impl Iterator<Item = &str> {
        self.freq.keys().map(String::as_str)
    }
}

/// A deduplicated, scored phrase.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoredKeyword {
    /// First-occurrence surface form, words joined by single spaces.
    pub surface: String,
    /// Space-joined normalized forms (the dedup key).
    pub normal: String,
    pub score: f64,
    pub token_count: usize,
}

/// Split a token stream into candidate phrases: delimiters and stopwords
/// break runs, everything else accumulates. Runs are maximal and never
/// merged, so every non-stopword word lands in exactly one candidate.
pub fn extract_candidates(
    stream: &TokenStream,
    stoplist: &Stoplist,
    doc_id: &str,
) -> Vec<CandidatePhrase> {
    let mut candidates = Vec::new();
    let mut words: Vec<Word> = Vec::new();
    let mut start = 0;

    let mut flush = |words: &mut Vec<Word>, start: usize| {
        if !words.is_empty() {
            candidates.push(CandidatePhrase {
                words: std::mem::take(words),
                doc_id: doc_id.to_string(),
                position: start,
            });
        }
    };

    for (index, item) in stream.items.iter().enumerate() {
        match item {
            Item::Word(word) if !stoplist.contains(&word.normal) => {
                if words.is_empty() {
                    start = index;
                }
                words.push(word.clone());
            }
            _ => flush(&mut words, start),
        }
    }
    flush(&mut words, start);

    candidates
}

/// Tally word frequency and degree over candidates (usually one document's).
pub fn build_graph(candidates: &[CandidatePhrase]) -> CooccurrenceGraph {
    let mut graph = CooccurrenceGraph::default();
    for candidate in candidates {
        let length = candidate.token_count() as u64;
        for word in &candidate.words {
            *graph.freq.entry(word.normal.clone()).or_insert(0) += 1;
            *graph.deg.entry(word.normal.clone()).or_insert(0) += length;
        }
    }
    graph
}

/// Score candidates against a graph and deduplicate by normalized key
/// (first occurrence keeps its surface form). A phrase's score sums the
/// word score of every member token, so a repeated word counts once per
/// occurrence and a k-token phrase always scores at least k. Sorted by
/// score descending, ties broken lexicographically by normalized key.
pub fn score_keywords(
    candidates: &[CandidatePhrase],
    graph: &CooccurrenceGraph,
) -> Vec<ScoredKeyword> {
    let mut seen = std::collections::BTreeSet::new();
    let mut keywords = Vec::new();
    for candidate in candidates {
        let normal = candidate.normal_key();
        if !seen.insert(normal.clone()) {
            continue;
        }
        let score = candidate
            .words
            .iter()
            .map(|w| graph.word_score(&w.normal))
            .sum();
        keywords.push(ScoredKeyword {
            surface: candidate.surface(),
            normal,
            score,
            token_count: candidate.token_count(),
        });
    }

    keywords.sort_by(|a, b| {
        b.score
            .partial_cmp(&a.score)
            .expect("scores are finite")
            .then_with(|| a.normal.cmp(&b.normal))
    });
    keywords
}

/// Optional extraction limits.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ExtractOptions {
    /// Keep only the best `top_k` keywords.
    pub top_k: Option<usize>,
    /// Drop candidates longer than this before the graph is built, so
    /// overlong runs contribute nothing to word scores either.
    pub max_phrase_len: Option<usize>,
}

/// The whole per-document pipeline: tokenize, split into candidates, build
/// the document's graph, score, dedup, rank.
pub fn extract_keywords(
    doc: &Document,
    stoplist: &Stoplist,
    config: &TokenizerConfig,
    top_k: Option<usize>,
) -> Vec<ScoredKeyword> {
    extract_keywords_with(
        doc,
        stoplist,
        config,
        &ExtractOptions {
            top_k,
            max_phrase_len: None,
        },
    )
}

/// [`extract_keywords`] with all limits available.
pub fn extract_keywords_with(
    doc: &Document,
    stoplist: &Stoplist,
    config: &TokenizerConfig,
    options: &ExtractOptions,
) -> Vec<ScoredKeyword> {
    let stream = tokenize(&doc.text, config);
    let mut candidates = extract_candidates(&stream, stoplist, &doc.doc_id);
    if let Some(max_len) = options.max_phrase_len {
        candidates.retain(|c| c.token_count() <= max_len);
    }
    let graph = build_graph(&candidates);
    let mut keywords = score_keywords(&candidates, &graph);
    if let Some(k) = options.top_k {
        keywords.truncate(k);
    }
    keywords
}

/// Run the per-document pipeline over a whole corpus (in parallel),
/// returning `(doc_id, keywords)` pairs in corpus order.
pub fn extract_corpus_keywords(
    corpus: &Corpus,
    stoplist: &Stoplist,
    config: &TokenizerConfig,
    options: &ExtractOptions,
) -> Vec<(String, Vec<ScoredKeyword>)> {
    corpus
        .documents()
        .par_iter()
        .map(|doc| {
            (
                doc.doc_id.clone(),
                extract_keywords_with(doc, stoplist, config, options),
            )
        })
        .collect()
}
