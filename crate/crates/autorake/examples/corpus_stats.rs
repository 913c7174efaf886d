//! Load the bundled sample corpus and print the head of its term statistics
//! table: collection frequency (total occurrences) next to document
//! frequency (how many documents contain the word).

use std::path::Path;

use autorake::{compute_term_stats, load_corpus, IngestionConfig, Result, TokenizerConfig};

fn main() -> Result<()> {
    let sample = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/sample");
    let outcome = load_corpus(&sample, &IngestionConfig::default())?;
    let table = compute_term_stats(&outcome.corpus, &TokenizerConfig::default());

    println!(
        "{} documents, {} distinct words, {} word tokens\n",
        table.doc_count(),
        table.vocab_size(),
        table.total_tokens()
    );

    let mut rows: Vec<_> = table.entries().collect();
    rows.sort_by(|a, b| b.1.collection_freq.cmp(&a.1.collection_freq).then(a.0.cmp(b.0)));

    println!("{:<16} {:>4} {:>4}", "word", "cf", "df");
    for (word, stats) in rows.iter().take(15) {
        println!(
            "{:<16} {:>4} {:>4}",
            word, stats.collection_freq, stats.doc_freq
        );
    }
    Ok(())
}
