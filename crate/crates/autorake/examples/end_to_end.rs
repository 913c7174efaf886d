//! The whole pipeline in one place: ingest a corpus, compute statistics, fit
//! the dispersion, generate a stoplist, extract keywords, and write every
//! artifact the command-line tool can produce into a scratch directory.

use std::path::Path;

use autorake::report::{write_keywords_jsonl, write_stats_csv};
use autorake::stoplist::save_stoplist;
use autorake::{
    compute_term_stats, export_scatter, extract_corpus_keywords, fit_negbin_r, generate_stoplist,
    load_corpus, ExtractOptions, IngestionConfig, Result, StoplistConfig, TokenizerConfig,
};

fn main() -> Result<()> {
    let sample = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/sample");
    let out_dir = std::env::temp_dir().join("autorake-end-to-end");
    std::fs::create_dir_all(&out_dir)?;

    // 1. Ingest.
    let outcome = load_corpus(&sample, &IngestionConfig::default())?;
    for skip in &outcome.skipped {
        eprintln!("skipped {}: {}", skip.doc_id, skip.reason);
    }
    let corpus = outcome.corpus;
    println!("ingested {} documents", corpus.doc_count());

    // 2. Count.
    let config = TokenizerConfig::default();
    let table = compute_term_stats(&corpus, &config);
    let mut stats_csv = Vec::new();
    write_stats_csv(&table, &mut stats_csv)?;
    std::fs::write(out_dir.join("stats.csv"), stats_csv)?;
    println!("counted {} distinct words", table.vocab_size());

    // 3. Fit.
    let fit = fit_negbin_r(&table)?;
    println!("fitted dispersion r = {:.4}", fit.r);

    // 4. Generate the stoplist.
    let stoplist = generate_stoplist(&table, &fit.model, &StoplistConfig::default())?;
    save_stoplist(&stoplist, &out_dir.join("stoplist.txt"))?;
    println!("generated a {}-word stoplist", stoplist.len());

    // 5. Extract.
    let results = extract_corpus_keywords(
        &corpus,
        &stoplist,
        &config,
        &ExtractOptions {
            top_k: Some(10),
            max_phrase_len: None,
        },
    );
    let mut jsonl = Vec::new();
    write_keywords_jsonl(&results, &mut jsonl)?;
    std::fs::write(out_dir.join("keywords.jsonl"), jsonl)?;
    let total: usize = results.iter().map(|(_, kws)| kws.len()).sum();
    println!("extracted {total} keywords across the corpus");

    // 6. Export plotting data.
    export_scatter(
        &table,
        fit.r,
        &out_dir.join("scatter.csv"),
        Some(&out_dir.join("curves.csv")),
    )?;

    println!("\nartifacts in {}:", out_dir.display());
    let mut names: Vec<String> = std::fs::read_dir(&out_dir)?
        .filter_map(|entry| Some(entry.ok()?.file_name().to_string_lossy().into_owned()))
        .collect();
    names.sort();
    for name in names {
        println!("  {name}");
    }
    Ok(())
}
