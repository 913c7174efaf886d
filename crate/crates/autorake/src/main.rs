//! Thin command-line front end over the library pipeline.
//!
//! Exit codes: 0 on success (including `--help`/`--version`), 1 on usage
//! errors, 2 on data errors (unreadable inputs, malformed files, ...).

use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use autorake::corpus::LoadOutcome;
use autorake::model::{fit_negbin_r, NegBinFit, OccurrenceModel};
use autorake::rake::{extract_corpus_keywords, ExtractOptions};
use autorake::report::{
    corpus_keyword_frequencies, export_scatter, filter_by_token_count, write_curves_csv,
    write_frequency_table, write_keywords_csv, write_keywords_jsonl, write_stats_csv, CountMode,
};
use autorake::stats::{compute_term_stats, TermStatsTable};
use autorake::stoplist::{generate_stoplist, load_stoplist, render_stoplist, save_stoplist,
    Stoplist, StoplistConfig};
use autorake::{load_config, load_corpus, Corpus, Error, FileConfig, Result};

#[derive(Parser)]
#[command(
    name = "autorake",
    version,
    about = "Corpus-adaptive keyword extraction: generate a stoplist from term statistics, then run RAKE"
)]
struct Cli {
    /// TOML config for ingestion and tokenization.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Load a corpus and report what was ingested.
    IngestCheck {
        /// Directory of text files, or a file with one document per line.
        source: PathBuf,
    },
    /// Per-word corpus statistics as CSV (word,cf,df).
    Stats {
        source: PathBuf,
        /// Write to a file instead of stdout.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Fit the negative binomial dispersion to the corpus; prints r.
    Fit {
        source: PathBuf,
        /// Also write dense model curves (cf,df_poisson,df_negbin) here.
        #[arg(long, value_name = "FILE")]
        curves: Option<PathBuf>,
    },
    /// Stoplist operations.
    #[command(subcommand)]
    Stoplist(StoplistCommand),
    /// Extract keywords from every document.
    Extract {
        source: PathBuf,
        /// Stoplist file; omitted means an empty stoplist (delimiters only).
        #[arg(long, value_name = "FILE")]
        stoplist: Option<PathBuf>,
        /// Keep only the best K keywords per document.
        #[arg(long, value_name = "K")]
        top_k: Option<usize>,
        /// Drop candidate phrases longer than this many tokens.
        #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
        max_phrase_len: Option<u64>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        /// Write to a file instead of stdout.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Corpus-level keyword frequency reports.
    #[command(subcommand)]
    Report(ReportCommand),
    /// Raw data exports for plotting.
    #[command(subcommand)]
    Export(ExportCommand),
}

#[derive(Subcommand)]
enum StoplistCommand {
    /// Generate a stoplist from the corpus's own term statistics.
    Generate {
        source: PathBuf,
        /// Keep words with expected/observed document frequency below this.
        #[arg(long, default_value_t = 1.6, value_parser = parse_threshold)]
        threshold: f64,
        /// ... that occur in at least this many documents.
        #[arg(long, default_value_t = 11, value_parser = clap::value_parser!(u64).range(1..))]
        min_df: u64,
        /// Scatter model for the expected document frequency.
        #[arg(long, value_enum, default_value_t = ModelArg::Negbin)]
        model: ModelArg,
        /// Write to a file instead of stdout.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ReportCommand {
    /// The most frequent keywords across the whole corpus.
    Top {
        source: PathBuf,
        /// Stoplist file; omitted means an empty stoplist.
        #[arg(long, value_name = "FILE")]
        stoplist: Option<PathBuf>,
        /// Number of rows to print.
        #[arg(long, default_value_t = 10)]
        k: usize,
        /// What the ranking counts.
        #[arg(long, value_enum, default_value_t = CountArg::Documents)]
        count: CountArg,
    },
    /// The most frequent keywords of an exact token length.
    ByLen {
        source: PathBuf,
        /// Stoplist file; omitted means an empty stoplist.
        #[arg(long, value_name = "FILE")]
        stoplist: Option<PathBuf>,
        /// Phrase length in tokens.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        tokens: u64,
        /// Number of rows to print.
        #[arg(long, default_value_t = 10)]
        k: usize,
        /// What the ranking counts.
        #[arg(long, value_enum, default_value_t = CountArg::Documents)]
        count: CountArg,
    },
}

#[derive(Subcommand)]
enum ExportCommand {
    /// Observed (cf, df) scatter with model expectations per word.
    Scatter {
        source: PathBuf,
        /// Scatter CSV output path.
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
        /// Also write dense model curves here.
        #[arg(long, value_name = "FILE")]
        curves: Option<PathBuf>,
        /// Dispersion for the model columns (default: fitted to the corpus).
        #[arg(long, value_parser = parse_dispersion)]
        r: Option<f64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    /// JSON Lines: one object per document.
    Json,
    /// Flat CSV: doc_id,surface,score,tokens.
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    /// Negative binomial with r fitted to the corpus.
    Negbin,
    /// Poisson (no dispersion parameter).
    Poisson,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountArg {
    /// Count each containing document once.
    Documents,
    /// Count every candidate occurrence.
    Occurrences,
}

impl From<CountArg> for CountMode {
    fn from(arg: CountArg) -> Self {
        match arg {
            CountArg::Documents => CountMode::Presence,
            CountArg::Occurrences => CountMode::Occurrences,
        }
    }
}

fn parse_threshold(s: &str) -> std::result::Result<f64, String> {
    let value: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err("must be positive and finite".to_string())
    }
}

fn parse_dispersion(s: &str) -> std::result::Result<f64, String> {
    parse_threshold(s)
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successful outcomes; everything
            // else clap rejects is a usage error.
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };

    if let Err(e) = run(cli) {
        eprintln!("error: {e}");
        std::process::exit(2);
    }
}

fn run(cli: Cli) -> Result<()> {
    let config = match &cli.config {
        Some(path) => load_config(path)?,
        None => FileConfig::default(),
    };

    match cli.command {
        Command::IngestCheck { source } => ingest_check(&source, &config),
        Command::Stats { source, out } => {
            let table = stats_for(&source, &config)?;
            let mut buffer = Vec::new();
            write_stats_csv(&table, &mut buffer)?;
            write_output(out.as_deref(), &buffer)
        }
        Command::Fit { source, curves } => {
            let table = stats_for(&source, &config)?;
            let fit = fit_with_warning(&table)?;
            if let Some(path) = curves {
                let mut buffer = Vec::new();
                write_curves_csv(table.doc_count(), fit.r, table.max_collection_freq(), &mut buffer)?;
                write_output(Some(&path), &buffer)?;
            }
            println!("{}", fit.r);
            Ok(())
        }
        Command::Stoplist(StoplistCommand::Generate {
            source,
            threshold,
            min_df,
            model,
            out,
        }) => {
            let table = stats_for(&source, &config)?;
            let model = match model {
                ModelArg::Poisson => OccurrenceModel::poisson(table.doc_count())?,
                ModelArg::Negbin => fit_with_warning(&table)?.model,
            };
            let stoplist = generate_stoplist(&table, &model, &StoplistConfig { threshold, min_df })?;
            eprintln!("stoplist: {} words", stoplist.len());
            match out {
                Some(path) => save_stoplist(&stoplist, &path),
                None => write_output(None, render_stoplist(&stoplist).as_bytes()),
            }
        }
        Command::Extract {
            source,
            stoplist,
            top_k,
            max_phrase_len,
            format,
            out,
        } => {
            let corpus = corpus_for(&source, &config)?;
            let stoplist = stoplist_or_empty(stoplist.as_deref())?;
            let options = ExtractOptions {
                top_k,
                max_phrase_len: max_phrase_len.map(|n| n as usize),
            };
            let results = extract_corpus_keywords(&corpus, &stoplist, &config.tokenizer, &options);
            let mut buffer = Vec::new();
            match format {
                OutputFormat::Json => write_keywords_jsonl(&results, &mut buffer)?,
                OutputFormat::Csv => write_keywords_csv(&results, &mut buffer)?,
            }
            write_output(out.as_deref(), &buffer)
        }
        Command::Report(report) => {
            let (source, stoplist, tokens, k, count) = match report {
                ReportCommand::Top {
                    source,
                    stoplist,
                    k,
                    count,
                } => (source, stoplist, None, k, count),
                ReportCommand::ByLen {
                    source,
                    stoplist,
                    tokens,
                    k,
                    count,
                } => (source, stoplist, Some(tokens as usize), k, count),
            };
            let corpus = corpus_for(&source, &config)?;
            let stoplist = stoplist_or_empty(stoplist.as_deref())?;
            let mode = CountMode::from(count);
            let mut rows = corpus_keyword_frequencies(&corpus, &stoplist, &config.tokenizer, mode);
            if let Some(tokens) = tokens {
                rows = filter_by_token_count(&rows, tokens);
            }
            let mut buffer = Vec::new();
            write_frequency_table(&rows, k, mode, &mut buffer)?;
            write_output(None, &buffer)
        }
        Command::Export(ExportCommand::Scatter {
            source,
            out,
            curves,
            r,
        }) => {
            let table = stats_for(&source, &config)?;
            let r = match r {
                Some(r) => r,
                None => fit_with_warning(&table)?.r,
            };
            export_scatter(&table, r, &out, curves.as_deref())
        }
    }
}

fn ingest_check(source: &Path, config: &FileConfig) -> Result<()> {
    let LoadOutcome { corpus, skipped } = load_corpus(source, &config.ingestion)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    writeln!(out, "documents: {}", corpus.doc_count())?;
    writeln!(out, "skipped: {}", skipped.len())?;
    for skip in &skipped {
        writeln!(out, "  {}: {}", skip.doc_id, skip.reason)?;
    }
    Ok(())
}

/// Load a corpus, reporting (not swallowing) any skipped documents.
fn corpus_for(source: &Path, config: &FileConfig) -> Result<Corpus> {
    let LoadOutcome { corpus, skipped } = load_corpus(source, &config.ingestion)?;
    for skip in &skipped {
        eprintln!("warning: skipped {}: {}", skip.doc_id, skip.reason);
    }
    Ok(corpus)
}

fn stats_for(source: &Path, config: &FileConfig) -> Result<TermStatsTable> {
    let corpus = corpus_for(source, config)?;
    Ok(compute_term_stats(&corpus, &config.tokenizer))
}

fn fit_with_warning(table: &TermStatsTable) -> Result<NegBinFit> {
    let fit = fit_negbin_r(table)?;
    if fit.at_boundary {
        eprintln!(
            "warning: fitted dispersion r = {} sits on the search boundary; \
             the corpus may be better described outside the supported range",
            fit.r
        );
    }
    Ok(fit)
}

fn stoplist_or_empty(path: Option<&Path>) -> Result<Stoplist> {
    match path {
        Some(path) => {
            let loaded = load_stoplist(path)?;
            if loaded.duplicates > 0 {
                eprintln!(
                    "warning: {} duplicate stoplist entries collapsed",
                    loaded.duplicates
                );
            }
            Ok(loaded.stoplist)
        }
        None => {
            eprintln!("warning: no stoplist given; phrases break on delimiters only");
            Ok(Stoplist::empty())
        }
    }
}

fn write_output(out: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, bytes).map_err(|e| Error::Write {
            path: path.to_path_buf(),
            source: e,
        }),
        None => {
            io::stdout().write_all(bytes)?;
            Ok(())
        }
    }
}
