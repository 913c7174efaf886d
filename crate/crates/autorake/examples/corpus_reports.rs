//! Corpus-level views: which phrases dominate the collection overall, and
//! which two-word phrases recur — the collocation report.

use std::path::Path;

use autorake::report::{corpus_keyword_frequencies, filter_by_token_count};
use autorake::{
    compute_term_stats, fit_negbin_r, generate_stoplist, load_corpus, CountMode, IngestionConfig,
    Result, StoplistConfig, TokenizerConfig,
};

fn main() -> Result<()> {
    let sample = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/sample");
    let corpus = load_corpus(&sample, &IngestionConfig::default())?.corpus;
    let config = TokenizerConfig::default();

    let table = compute_term_stats(&corpus, &config);
    let fit = fit_negbin_r(&table)?;
    let stoplist = generate_stoplist(&table, &fit.model, &StoplistConfig::default())?;

    let rows = corpus_keyword_frequencies(&corpus, &stoplist, &config, CountMode::Presence);
    println!("most widespread phrases (documents containing them):");
    for row in rows.iter().take(8) {
        println!("  {:>3}  {}", row.doc_count, row.surface);
    }

    println!("\ntwo-word phrases only:");
    for row in filter_by_token_count(&rows, 2).iter().take(8) {
        println!("  {:>3}  {}", row.doc_count, row.surface);
    }

    println!("\nsame ranking by raw occurrence count instead:");
    let by_occurrences =
        corpus_keyword_frequencies(&corpus, &stoplist, &config, CountMode::Occurrences);
    for row in by_occurrences.iter().take(5) {
        println!("  {:>3}  {}", row.occurrences, row.surface);
    }
    Ok(())
}
