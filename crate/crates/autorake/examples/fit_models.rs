//! Fit the negative binomial dispersion to the sample corpus and compare
//! what each model expects against what a few words actually did. Words that
//! sit close to the fitted curve are spread at random — stopword material.

use std::path::Path;

use autorake::{
    compute_term_stats, fit_negbin_r, load_corpus, randomness_ratio, IngestionConfig,
    OccurrenceModel, Result, TokenizerConfig,
};

fn main() -> Result<()> {
    let sample = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/sample");
    let corpus = load_corpus(&sample, &IngestionConfig::default())?.corpus;
    let table = compute_term_stats(&corpus, &TokenizerConfig::default());

    let fit = fit_negbin_r(&table)?;
    println!("fitted dispersion r = {:.4}", fit.r);
    println!("objective (sum of squared log residuals) = {:.4}", fit.objective);
    if fit.at_boundary {
        println!("(the minimum sits on the search boundary — treat with suspicion)");
    }

    let poisson = OccurrenceModel::poisson(table.doc_count())?;
    println!(
        "\n{:<14} {:>4} {:>4} {:>12} {:>12} {:>8}",
        "word", "cf", "df", "df(poisson)", "df(negbin)", "ratio"
    );
    for word in ["w", "oraz", "przetarg", "odpady", "stacja"] {
        let Some(stats) = table.get(word) else { continue };
        let cf = stats.collection_freq as f64;
        println!(
            "{:<14} {:>4} {:>4} {:>12.2} {:>12.2} {:>8.3}",
            word,
            stats.collection_freq,
            stats.doc_freq,
            poisson.expected_df(cf)?,
            fit.model.expected_df(cf)?,
            randomness_ratio(stats, &fit.model)?,
        );
    }
    println!("\nratio < 1.6 marks a word as randomly spread (given enough df).");
    Ok(())
}
