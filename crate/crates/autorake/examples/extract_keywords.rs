//! Extract keywords from single documents, with the stoplist generated from
//! the corpus itself. Shows how the same text yields very different phrases
//! with and without a stoplist.

use std::path::Path;

use autorake::{
    compute_term_stats, extract_keywords, fit_negbin_r, generate_stoplist, load_corpus,
    IngestionConfig, Result, Stoplist, StoplistConfig, TokenizerConfig,
};

fn main() -> Result<()> {
    let sample = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/sample");
    let corpus = load_corpus(&sample, &IngestionConfig::default())?.corpus;
    let config = TokenizerConfig::default();

    let table = compute_term_stats(&corpus, &config);
    let fit = fit_negbin_r(&table)?;
    let stoplist = generate_stoplist(&table, &fit.model, &StoplistConfig::default())?;

    let doc = &corpus.documents()[0];
    println!("document {}:\n{}\n", doc.doc_id, doc.text.lines().next().unwrap_or(""));

    println!("top keywords with the generated stoplist ({} words):", stoplist.len());
    for keyword in extract_keywords(doc, &stoplist, &config, Some(5)) {
        println!("  {:>7.3}  {}", keyword.score, keyword.surface);
    }

    println!("\ntop keywords with no stoplist at all:");
    for keyword in extract_keywords(doc, &Stoplist::empty(), &config, Some(5)) {
        println!("  {:>7.3}  {}", keyword.score, keyword.surface);
    }
    println!("\nwithout stopwords the phrases smear across whole clauses.");
    Ok(())
}
