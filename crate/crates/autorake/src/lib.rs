//! Corpus-adaptive keyword extraction.
//!
//! RAKE splits text into candidate phrases wherever a stopword or a
//! delimiter occurs, then ranks the phrases by word co-occurrence degree
//! over frequency. Its one real input besides the text is the stoplist —
//! and a stoplist tuned to one language or domain transfers poorly to
//! another. This crate closes that gap by generating the stoplist from the
//! corpus itself: words whose document frequency matches what random
//! scatter (Poisson or negative binomial) predicts are boilerplate, words
//! that clump are content.
//!
//! The pipeline, end to end:
//!
//! 1. [`corpus::load_corpus`] — ingest a directory of text files or a
//!    line-per-document file.
//! 2. [`stats::compute_term_stats`] — per-word collection and document
//!    frequencies.
//! 3. [`model::fit_negbin_r`] — fit the negative binomial dispersion to
//!    the corpus ([`model::OccurrenceModel`] evaluates the expectations).
//! 4. [`stoplist::generate_stoplist`] — threshold the randomness ratio.
//! 5. [`rake::extract_keywords`] — per-document candidates, graph, scores.
//! 6. [`report`] — corpus-level tables and CSV/JSONL exports.
//!
//! Every step is a plain function over plain data, so the stages can be
//! swapped or resumed freely — e.g. load a hand-written stoplist with
//! [`stoplist::load_stoplist`] instead of generating one.
//!
//! # Examples
//!
//! The `examples/` directory walks through each capability on the bundled
//! sample corpus:
//!
//! - `tokenize_text` — what the tokenizer does to raw text
//! - `corpus_stats` — cf/df tables
//! - `fit_models` — dispersion fitting and what the curves look like
//! - `generate_stoplist` — automatic stoplist generation
//! - `extract_keywords` — per-document RAKE
//! - `corpus_reports` — corpus-wide keyword tables
//! - `end_to_end` — the whole pipeline in one file
//!
//! Run one with `cargo run --example end_to_end`. The same operations are
//! available from the thin `autorake` binary (`autorake --help`).

pub mod config;
pub mod corpus;
pub mod error;
pub mod model;
pub mod rake;
pub mod report;
pub mod stats;
pub mod stoplist;
pub mod tokenize;

pub use config::{load_config, FileConfig};
pub use corpus::{load_corpus, Corpus, Document, IngestionConfig, LoadOutcome};
pub use error::{Error, Result};
pub use model::{fit_negbin_r, randomness_ratio, ModelKind, NegBinFit, OccurrenceModel};
pub use rake::{
    build_graph, extract_candidates, extract_corpus_keywords, extract_keywords,
    extract_keywords_with, score_keywords, CandidatePhrase, CooccurrenceGraph, ExtractOptions,
    ScoredKeyword,
};
pub use report::{
    corpus_keyword_frequencies, export_scatter, filter_by_token_count, CountMode,
    KeywordFrequencyRow,
};
pub use stats::{compute_term_stats, TermStats, TermStatsTable};
pub use stoplist::{
    generate_stoplist, load_stoplist, save_stoplist, Provenance, Stoplist, StoplistConfig,
};
pub use tokenize::{normalize, tokenize, DelimiterKind, Item, TokenStream, TokenizerConfig, Word};
