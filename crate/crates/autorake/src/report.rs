//! Corpus-level keyword tables and CSV/JSONL serialization.
//!
//! Everything here renders deterministically: row orders are fully
//! specified (no hash-map iteration leaks through), floats print in
//! shortest round-trip form, and line endings are LF.

use std::collections::HashMap;
use std::io;
use std::path::Path;

use rayon::prelude::*;

use crate::corpus::Corpus;
use crate::error::{Error, Result};
use crate::model::OccurrenceModel;
use crate::rake::{extract_candidates, ScoredKeyword};
use crate::stats::{TermStats, TermStatsTable};
use crate::stoplist::Stoplist;
use crate::tokenize::{tokenize, TokenizerConfig};

/// How phrases are counted across the corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CountMode {
    /// Number of documents the phrase occurs in (each document counts once).
    #[default]
    Presence,
    /// Total number of candidate occurrences.
    Occurrences,
}

/// One phrase aggregated over the whole corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeywordFrequencyRow {
    /// Normalized phrase (the aggregation key).
    pub normal: String,
    /// Most frequent surface variant; ties go to the variant seen first in
    /// document order.
    pub surface: String,
    pub doc_count: u64,
    pub occurrences: u64,
    pub token_count: usize,
}

impl KeywordFrequencyRow {
    pub fn count(&self, mode: CountMode) -> u64 {
        match mode {
            CountMode::Presence => self.doc_count,
            CountMode::Occurrences => self.occurrences,
        }
    }
}

/// One phrase's tallies inside a single document.
struct DocPhrase {
    normal: String,
    token_count: usize,
    occurrences: u64,
    /// Surface variants with occurrence counts, in first-occurrence order.
    surfaces: Vec<(String, u64)>,
}

fn collect_doc_phrases(
    text: &str,
    doc_id: &str,
    stoplist: &Stoplist,
    config: &TokenizerConfig,
) -> Vec<DocPhrase> {
    let stream = tokenize(text, config);
    let candidates = extract_candidates(&stream, stoplist, doc_id);

    let mut phrases: Vec<DocPhrase> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    for candidate in &candidates {
        let normal = candidate.normal_key();
        let surface = candidate.surface();
        let slot = *index.entry(normal.clone()).or_insert_with(|| {
            phrases.push(DocPhrase {
                normal,
                token_count: candidate.token_count(),
                occurrences: 0,
                surfaces: Vec::new(),
            });
            phrases.len() - 1
        });
        let phrase = &mut phrases[slot];
        phrase.occurrences += 1;
        match phrase.surfaces.iter_mut().find(|(s, _)| *s == surface) {
            Some((_, count)) => *count += 1,
            None => phrase.surfaces.push((surface, 1)),
        }
    }
    phrases
}

/// Aggregate every document's candidate phrases into corpus-wide rows,
/// ranked by the chosen count (descending), ties broken lexicographically
/// by normalized phrase.
pub fn corpus_keyword_frequencies(
    corpus: &Corpus,
    stoplist: &Stoplist,
    config: &TokenizerConfig,
    mode: CountMode,
) -> Vec<KeywordFrequencyRow> {
    let per_doc: Vec<Vec<DocPhrase>> = corpus
        .documents()
        .par_iter()
        .map(|doc| collect_doc_phrases(&doc.text, &doc.doc_id, stoplist, config))
        .collect();

    struct Agg {
        token_count: usize,
        doc_count: u64,
        occurrences: u64,
        /// surface -> (occurrences, first-seen stamp)
        surfaces: HashMap<String, (u64, usize)>,
    }

    // Sequential merge in document order so "first seen" is well defined
    // (document order itself is canonical: the corpus is sorted by id).
    let mut aggs: std::collections::BTreeMap<String, Agg> = std::collections::BTreeMap::new();
    let mut stamp = 0;
    for phrases in per_doc {
        for phrase in phrases {
            let agg = aggs.entry(phrase.normal).or_insert(Agg {
                token_count: phrase.token_count,
                doc_count: 0,
                occurrences: 0,
                surfaces: HashMap::new(),
            });
            agg.doc_count += 1;
            agg.occurrences += phrase.occurrences;
            for (surface, count) in phrase.surfaces {
                let entry = agg.surfaces.entry(surface).or_insert((0, stamp));
                entry.0 += count;
                stamp += 1;
            }
        }
    }

    let mut rows: Vec<KeywordFrequencyRow> = aggs
        .into_iter()
        .map(|(normal, agg)| {
            let surface = agg
                .surfaces
                .iter()
                .max_by(|a, b| (a.1 .0, std::cmp::Reverse(a.1 .1)).cmp(&(b.1 .0, std::cmp::Reverse(b.1 .1))))
                .map(|(s, _)| s.clone())
                .expect("an aggregated phrase has at least one surface form");
            KeywordFrequencyRow {
                normal,
                surface,
                doc_count: agg.doc_count,
                occurrences: agg.occurrences,
                token_count: agg.token_count,
            }
        })
        .collect();

    rows.sort_by(|a, b| {
        b.count(mode)
            .cmp(&a.count(mode))
            .then_with(|| a.normal.cmp(&b.normal))
    });
    rows
}

/// Keep only phrases of exactly `token_count` tokens, preserving order.
pub fn filter_by_token_count(
    rows: &[KeywordFrequencyRow],
    token_count: usize,
) -> Vec<KeywordFrequencyRow> {
    rows.iter()
        .filter(|row| row.token_count == token_count)
        .cloned()
        .collect()
}

/// Stats rows in output order: collection frequency descending, then word.
fn ordered_stats<'t>(table: &'t TermStatsTable) -> Vec<(&'t str, &'t TermStats)> {
    let mut rows: Vec<(&str, &TermStats)> = table.entries().collect();
    rows.sort_by(|a, b| {
        b.1.collection_freq
            .cmp(&a.1.collection_freq)
            .then_with(|| a.0.cmp(b.0))
    });
    rows
}

fn csv_to_io(e: csv::Error) -> io::Error {
    io::Error::other(e)
}

/// `word,cf,df` — one row per vocabulary word.
pub fn write_stats_csv<W: io::Write>(table: &TermStatsTable, out: W) -> io::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(["word", "cf", "df"]).map_err(csv_to_io)?;
    for (word, stats) in ordered_stats(table) {
        writer
            .write_record([
                word,
                &stats.collection_freq.to_string(),
                &stats.doc_freq.to_string(),
            ])
            .map_err(csv_to_io)?;
    }
    writer.flush()
}

/// `word,cf,df,df_poisson,df_negbin,ratio_negbin` — observed stats next to
/// both model expectations, ready for scatter plotting.
pub fn write_scatter_csv<W: io::Write>(table: &TermStatsTable, r: f64, out: W) -> Result<()> {
    if table.doc_count() == 0 {
        return Err(Error::EmptyCorpus);
    }
    let poisson = OccurrenceModel::poisson(table.doc_count())?;
    let negbin = OccurrenceModel::negative_binomial(table.doc_count(), r)?;

    let mut writer = csv::Writer::from_writer(out);
    writer
        .write_record(["word", "cf", "df", "df_poisson", "df_negbin", "ratio_negbin"])
        .map_err(|e| Error::Io(csv_to_io(e)))?;
    for (word, stats) in ordered_stats(table) {
        let cf = stats.collection_freq as f64;
        let df_poisson = poisson.expected_df(cf).expect("cf is a count");
        let df_negbin = negbin.expected_df(cf).expect("cf is a count");
        let ratio = df_negbin / stats.doc_freq as f64;
        writer
            .write_record([
                word,
                &stats.collection_freq.to_string(),
                &stats.doc_freq.to_string(),
                &df_poisson.to_string(),
                &df_negbin.to_string(),
                &ratio.to_string(),
            ])
            .map_err(|e| Error::Io(csv_to_io(e)))?;
    }
    writer.flush().map_err(Error::Io)
}

/// Number of points on the dense model-curve grid.
pub const CURVE_POINTS: usize = 200;

/// `cf,df_poisson,df_negbin` over a log-uniform grid of [`CURVE_POINTS`]
/// values spanning `[1, max_cf]` — the smooth curves to draw through a
/// scatter export.
pub fn write_curves_csv<W: io::Write>(
    doc_count: u64,
    r: f64,
    max_cf: u64,
    out: W,
) -> Result<()> {
    let poisson = OccurrenceModel::poisson(doc_count)?;
    let negbin = OccurrenceModel::negative_binomial(doc_count, r)?;
    let top = (max_cf.max(1)) as f64;

    let mut writer = csv::Writer::from_writer(out);
    writer
        .write_record(["cf", "df_poisson", "df_negbin"])
        .map_err(|e| Error::Io(csv_to_io(e)))?;
    for i in 0..CURVE_POINTS {
        let fraction = i as f64 / (CURVE_POINTS - 1) as f64;
        let cf = (fraction * top.ln()).exp();
        let df_poisson = poisson.expected_df(cf).expect("grid cf is non-negative");
        let df_negbin = negbin.expected_df(cf).expect("grid cf is non-negative");
        writer
            .write_record([&cf.to_string(), &df_poisson.to_string(), &df_negbin.to_string()])
            .map_err(|e| Error::Io(csv_to_io(e)))?;
    }
    writer.flush().map_err(Error::Io)
}

/// Write the scatter CSV (and optionally the dense curves CSV) to disk.
pub fn export_scatter(
    table: &TermStatsTable,
    r: f64,
    scatter_path: &Path,
    curves_path: Option<&Path>,
) -> Result<()> {
    let mut scatter = Vec::new();
    write_scatter_csv(table, r, &mut scatter)?;
    std::fs::write(scatter_path, scatter).map_err(|e| Error::Write {
        path: scatter_path.to_path_buf(),
        source: e,
    })?;

    if let Some(curves_path) = curves_path {
        let mut curves = Vec::new();
        write_curves_csv(table.doc_count(), r, table.max_collection_freq(), &mut curves)?;
        std::fs::write(curves_path, curves).map_err(|e| Error::Write {
            path: curves_path.to_path_buf(),
            source: e,
        })?;
    }
    Ok(())
}

/// Phrase-and-count table, tab separated, at most `limit` rows.
pub fn write_frequency_table<W: io::Write>(
    rows: &[KeywordFrequencyRow],
    limit: usize,
    mode: CountMode,
    mut out: W,
) -> io::Result<()> {
    for row in rows.iter().take(limit) {
        writeln!(out, "{}\t{}", row.surface, row.count(mode))?;
    }
    Ok(())
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

/// One JSON object per document:
/// `{"doc_id":...,"keywords":[{"surface":...,"score":...,"tokens":...}]}`.
/// Scores are fixed to four decimal places.
pub fn write_keywords_jsonl<W: io::Write>(
    results: &[(String, Vec<ScoredKeyword>)],
    mut out: W,
) -> io::Result<()> {
    for (doc_id, keywords) in results {
        write!(out, "{{\"doc_id\":{},\"keywords\":[", json_string(doc_id))?;
        for (i, keyword) in keywords.iter().enumerate() {
            if i > 0 {
                write!(out, ",")?;
            }
            write!(
                out,
                "{{\"surface\":{},\"score\":{:.4},\"tokens\":{}}}",
                json_string(&keyword.surface),
                keyword.score,
                keyword.token_count
            )?;
        }
        writeln!(out, "]}}")?;
    }
    Ok(())
}

/// `doc_id,surface,score,tokens` — one row per extracted keyword.
pub fn write_keywords_csv<W: io::Write>(
    results: &[(String, Vec<ScoredKeyword>)],
    out: W,
) -> io::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer
        .write_record(["doc_id", "surface", "score", "tokens"])
        .map_err(csv_to_io)?;
    for (doc_id, keywords) in results {
        for keyword in keywords {
            writer
                .write_record([
                    doc_id.as_str(),
                    &keyword.surface,
                    &format!("{:.4}", keyword.score),
                    &keyword.token_count.to_string(),
                ])
                .map_err(csv_to_io)?;
        }
    }
    writer.flush()
}
