#![allow(dead_code)]

//! Shared fixtures for the integration suite: the frozen model reference
//! tables, a naive quadratic re-implementation of the keyword scorer used as
//! a differential oracle, and seeded synthetic corpora with known parameters.

pub mod reference;

use std::collections::HashSet;
use std::path::{Path, PathBuf};

use autorake::{tokenize, Item, TermStatsTable, TokenizerConfig};
use rand::seq::index::sample as sample_indices;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Gamma, Poisson};

pub fn sample_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data/sample")
}

// ---------------------------------------------------------------------------
// Differential oracle for keyword extraction.
//
// Deliberately naive: phrases are split with an explicit loop, every word
// score is recomputed by scanning the whole phrase list, and duplicates are
// found by pairwise comparison. No maps, no caching — quadratic on purpose,
// so a bookkeeping bug in the fast path cannot be mirrored here.
// ---------------------------------------------------------------------------

pub struct RefKeyword {
    pub surface: String,
    pub normal: String,
    pub score: f64,
    pub token_count: usize,
}

pub fn reference_extract(
    text: &str,
    stopwords: &HashSet<String>,
    config: &TokenizerConfig,
) -> Vec<RefKeyword> {
    let stream = tokenize(text, config);

    let mut phrases: Vec<Vec<(String, String)>> = Vec::new();
    let mut current: Vec<(String, String)> = Vec::new();
    for item in &stream.items {
        match item {
            Item::Word(word) => {
                if stopwords.contains(&word.normal) {
                    if !current.is_empty() {
                        phrases.push(std::mem::take(&mut current));
                    }
                } else {
                    current.push((word.surface.clone(), word.normal.clone()));
                }
            }
            Item::Delimiter(_) => {
                if !current.is_empty() {
                    phrases.push(std::mem::take(&mut current));
                }
            }
        }
    }
    if !current.is_empty() {
        phrases.push(current);
    }

    let word_score = |normal: &str| -> f64 {
        let mut occurrences = 0u64;
        let mut degree = 0u64;
        for phrase in &phrases {
            for (_, n) in phrase {
                if n == normal {
                    occurrences += 1;
                    degree += phrase.len() as u64;
                }
            }
        }
        degree as f64 / occurrences as f64
    };

    let mut results: Vec<RefKeyword> = Vec::new();
    'phrases: for (i, phrase) in phrases.iter().enumerate() {
        let normals: Vec<&str> = phrase.iter().map(|(_, n)| n.as_str()).collect();
        for earlier in &phrases[..i] {
            let earlier_normals: Vec<&str> = earlier.iter().map(|(_, n)| n.as_str()).collect();
            if earlier_normals == normals {
                continue 'phrases;
            }
        }
        let score = normals.iter().map(|n| word_score(n)).sum();
        results.push(RefKeyword {
            surface: phrase
                .iter()
                .map(|(s, _)| s.as_str())
                .collect::<Vec<_>>()
                .join(" "),
            normal: normals.join(" "),
            score,
            token_count: phrase.len(),
        });
    }

    results.sort_by(|a, b| {
        b.score
            .partial_cmp(&a.score)
            .expect("scores are finite")
            .then_with(|| a.normal.cmp(&b.normal))
    });
    results
}

// ---------------------------------------------------------------------------
// Synthetic occurrence tables with known ground truth.
// ---------------------------------------------------------------------------

/// Per-document counts for one word under a gamma-Poisson mixture, i.e. a
/// negative binomial with dispersion `r` and mean `mu`.
fn negbin_doc_counts(rng: &mut ChaCha8Rng, doc_count: u64, mu: f64, r: f64) -> Vec<u64> {
    let gamma = Gamma::new(r, mu / r).expect("valid gamma parameters");
    (0..doc_count)
        .map(|_| {
            let lambda = gamma.sample(rng);
            if lambda > 0.0 {
                let draw: f64 = Poisson::new(lambda).expect("positive rate").sample(rng);
                draw as u64
            } else {
                0
            }
        })
        .collect()
}

fn poisson_doc_counts(rng: &mut ChaCha8Rng, doc_count: u64, mu: f64) -> Vec<u64> {
    let poisson = Poisson::new(mu).expect("positive rate");
    (0..doc_count)
        .map(|_| {
            let draw: f64 = poisson.sample(rng);
            draw as u64
        })
        .collect()
}

fn stats_from_counts(counts: &[u64]) -> Option<(u64, u64)> {
    let cf: u64 = counts.iter().sum();
    let df = counts.iter().filter(|&&c| c > 0).count() as u64;
    (df > 0).then_some((cf, df))
}

/// A vocabulary of words whose per-document counts all follow a negative
/// binomial with the same dispersion `r`; means are log-uniform over
/// `[mu_lo, mu_hi]`. Words that never occur are dropped.
pub fn negbin_table(
    seed: u64,
    doc_count: u64,
    word_count: usize,
    r: f64,
    mu_lo: f64,
    mu_hi: f64,
) -> TermStatsTable {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut entries = Vec::new();
    for i in 0..word_count {
        let mu = rng.random_range(mu_lo.ln()..mu_hi.ln()).exp();
        let counts = negbin_doc_counts(&mut rng, doc_count, mu, r);
        if let Some((cf, df)) = stats_from_counts(&counts) {
            entries.push((format!("w{i:04}"), cf, df));
        }
    }
    TermStatsTable::from_entries(doc_count, entries).expect("synthetic table is valid")
}

pub struct PlantedTable {
    pub table: TermStatsTable,
    pub stopwords: Vec<String>,
    pub content_words: Vec<String>,
}

/// A mixed table: `stopword_count` words occur Poisson-at-random everywhere
/// (means log-uniform over `[0.1, 5]`), while `content_count` words cluster
/// inside a random 5% of documents with counts of `1 + Poisson(3)`.
pub fn planted_table(seed: u64, doc_count: u64, stopword_count: usize, content_count: usize) -> PlantedTable {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut entries = Vec::new();

    let mut stopwords = Vec::new();
    for i in 0..stopword_count {
        let mu = rng.random_range(0.1f64.ln()..5f64.ln()).exp();
        let counts = poisson_doc_counts(&mut rng, doc_count, mu);
        let (cf, df) = stats_from_counts(&counts).expect("random words with these means occur");
        let word = format!("stop{i:02}");
        entries.push((word.clone(), cf, df));
        stopwords.push(word);
    }

    let cluster_size = (doc_count as usize) / 20;
    let burst = Poisson::new(3.0).expect("positive rate");
    let mut content_words = Vec::new();
    for i in 0..content_count {
        let picked = sample_indices(&mut rng, doc_count as usize, cluster_size);
        let mut cf = 0u64;
        for _ in picked.iter() {
            let extra: f64 = burst.sample(&mut rng);
            cf += 1 + extra as u64;
        }
        let word = format!("topic{i:02}");
        entries.push((word.clone(), cf, cluster_size as u64));
        content_words.push(word);
    }

    let table =
        TermStatsTable::from_entries(doc_count, entries).expect("synthetic table is valid");
    PlantedTable {
        table,
        stopwords,
        content_words,
    }
}

// ---------------------------------------------------------------------------
// Random documents for differential testing.
// ---------------------------------------------------------------------------

const LEXICON: [&str; 36] = [
    "umowa", "wykonawca", "oferta", "postępowanie", "zamawiający", "termin", "dniu", "sprawie",
    "która", "został", "przetarg", "kolej", "stacja", "peron", "budowa", "remont", "droga",
    "żwir", "łąka", "ćma", "źródło", "święto", "miasto", "gmina", "rada", "uchwała", "wniosek",
    "decyzja", "protokół", "zebranie", "koszt", "wartość", "2013", "17", "r", "nr",
];

const SEPARATORS: [&str; 7] = [" ", " ", " ", ", ", ". ", "; ", " – "];

/// A short random document mixing lexicon words, digits, and punctuation.
pub fn random_document(rng: &mut ChaCha8Rng, max_tokens: usize) -> String {
    let token_count = rng.random_range(0..=max_tokens);
    let mut text = String::new();
    for _ in 0..token_count {
        let word = LEXICON[rng.random_range(0..LEXICON.len())];
        if text.is_empty() {
            text.push_str(word);
        } else {
            let sep = SEPARATORS[rng.random_range(0..SEPARATORS.len())];
            text.push_str(sep);
            text.push_str(word);
        }
    }
    if !text.is_empty() && rng.random_range(0..3) == 0 {
        text.push('.');
    }
    text
}

/// A stoplist drawn from the same lexicon, so random documents actually
/// contain stopwords.
pub fn random_stopwords(rng: &mut ChaCha8Rng, count: usize) -> HashSet<String> {
    let picked = sample_indices(rng, LEXICON.len(), count);
    picked
        .iter()
        .map(|i| LEXICON[i].to_lowercase())
        .collect()
}
