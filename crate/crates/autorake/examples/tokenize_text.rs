//! Show how raw text becomes a token stream: words keep their surface and
//! normalized forms, punctuation collapses into typed delimiters, and plain
//! whitespace vanishes entirely.

use autorake::{tokenize, Item, TokenizerConfig};

fn main() {
    let text = "Wyrok z dnia 23 marca 2013 r. dotyczy umowy; odwołanie (sygn. akt KIO 451/13) oddalono.";
    let config = TokenizerConfig::default();

    println!("input: {text}\n");
    for item in &tokenize(text, &config).items {
        match item {
            Item::Word(word) if word.surface == word.normal => {
                println!("word      {}", word.surface);
            }
            Item::Word(word) => {
                println!("word      {}  (normalized: {})", word.surface, word.normal);
            }
            Item::Delimiter(kind) => println!("delimiter ({kind:?})"),
        }
    }

    let digits_break = TokenizerConfig {
        numbers_as_words: false,
    };
    let words: Vec<String> = tokenize("23 marca 2013 r.", &digits_break)
        .words()
        .map(|w| w.surface.clone())
        .collect();
    println!("\nwith numbers_as_words = false, \"23 marca 2013 r.\" keeps only: {words:?}");
}
