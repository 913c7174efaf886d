//! Derive a stoplist from the sample corpus's own statistics — no hand-made
//! word list anywhere — and print it in the on-disk format.

use std::path::Path;

use autorake::stoplist::render_stoplist;
use autorake::{
    compute_term_stats, fit_negbin_r, generate_stoplist, load_corpus, IngestionConfig, Result,
    StoplistConfig, TokenizerConfig,
};

fn main() -> Result<()> {
    let sample = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/sample");
    let corpus = load_corpus(&sample, &IngestionConfig::default())?.corpus;
    let table = compute_term_stats(&corpus, &TokenizerConfig::default());
    let fit = fit_negbin_r(&table)?;

    // The defaults: ratio below 1.6, seen in at least 11 documents.
    let stoplist = generate_stoplist(&table, &fit.model, &StoplistConfig::default())?;
    print!("{}", render_stoplist(&stoplist));

    // Tightening min_df trades recall for precision.
    let strict = generate_stoplist(
        &table,
        &fit.model,
        &StoplistConfig {
            threshold: 1.6,
            min_df: 25,
        },
    )?;
    eprintln!(
        "\ndefault config keeps {} words; min_df = 25 keeps {}",
        stoplist.len(),
        strict.len()
    );
    Ok(())
}
