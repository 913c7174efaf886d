//! Unicode-aware segmentation of raw text into word and delimiter runs.
//!
//! The stream is a partition of the input's word characters: every maximal
//! run of letters (or of digits) becomes exactly one [`Word`], in order, and
//! runs of everything else collapse into at most one [`Item::Delimiter`].
//! Runs of
//! pure whitespace separate words without emitting anything, so downstream
//! phrase building sees `word word` as adjacent but `word, word` as split.

use serde::Deserialize;

/// Punctuation that closes a sentence-like unit wherever it appears.
const SENTENCE_PUNCTUATION: [char; 5] = ['.', '!', '?', ';', ':'];

/// Knobs for [`tokenize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TokenizerConfig {
    /// Treat digit runs as words (`"23 marca"` keeps the `23`). When false,
    /// digits behave like punctuation and break phrases instead.
    pub numbers_as_words: bool,
}

impl Default for TokenizerConfig {
    fn default() -> Self {
        Self {
            numbers_as_words: true,
        }
    }
}

/// A single word occurrence: the surface form as written plus the
/// lowercased form used as a match key everywhere else in the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    pub surface: String,
    pub normal: String,
}

impl Word {
    pub fn new(surface: impl Into<String>) -> Self {
        let surface = surface.into();
        let normal = normalize(&surface);
        Self { surface, normal }
    }
}

/// What a delimiter run contained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DelimiterKind {
    /// The run contained sentence punctuation (`. ! ? ; :`).
    SentenceSeparator,
    /// Any other non-word, non-whitespace content (commas, dashes, ...).
    StopSymbol,
}

/// One element of a [`TokenStream`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Item {
    Word(Word),
    Delimiter(DelimiterKind),
}

/// The tokenized form of one document.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TokenStream {
    pub items: Vec<Item>,
}

impl TokenStream {
    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// The word items, in order, skipping delimiters.
    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.items.iter().filter_map(|item| match item {
            Item::Word(word) => Some(word),
            Item::Delimiter(_) => None,
        })
    }
}

/// Lowercase a surface form into its match key. Normalization is exactly
/// Unicode lowercasing: no stemming, no diacritic stripping, so `Łodzi`
/// and `łodzi` meet but `łodzi` and `lodzi` stay distinct.
pub fn normalize(surface: &str) -> String {
    surface.to_lowercase()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CharClass {
    Letter,
    Digit,
    Other,
}

fn classify(c: char, config: &TokenizerConfig) -> CharClass {
    // Letters first: a few scripts have characters that are both letter-like
    // and numeric, and those should stay inside letter runs.
    if c.is_alphabetic() {
        CharClass::Letter
    } else if c.is_numeric() && config.numbers_as_words {
        CharClass::Digit
    } else {
        CharClass::Other
    }
}

/// Split `text` into maximal word runs and the delimiters between them.
pub fn tokenize(text: &str, config: &TokenizerConfig) -> TokenStream {
    let mut items = Vec::new();
    let mut word = String::new();
    let mut word_class = CharClass::Other;
    // Pending (not yet emitted) delimiter run.
    let mut in_delimiter = false;
    let mut saw_symbol = false;
    let mut saw_sentence_punct = false;

    let flush_delimiter = |saw_symbol: bool, saw_sentence: bool, items: &mut Vec<Item>| {
        if saw_symbol {
            let kind = if saw_sentence {
                DelimiterKind::SentenceSeparator
            } else {
                DelimiterKind::StopSymbol
            };
            items.push(Item::Delimiter(kind));
        }
    };

    for c in text.chars() {
        let class = classify(c, config);
        match class {
            CharClass::Letter | CharClass::Digit => {
                if in_delimiter {
                    flush_delimiter(saw_symbol, saw_sentence_punct, &mut items);
                    in_delimiter = false;
                    saw_symbol = false;
                    saw_sentence_punct = false;
                }
                // A class change ends the current run even with no delimiter
                // in between: "r2" is the word "r" followed by the word "2".
                if !word.is_empty() && word_class != class {
                    items.push(Item::Word(Word::new(std::mem::take(&mut word))));
                }
                word_class = class;
                word.push(c);
            }
            CharClass::Other => {
                if !word.is_empty() {
                    items.push(Item::Word(Word::new(std::mem::take(&mut word))));
                }
                in_delimiter = true;
                if !c.is_whitespace() {
                    saw_symbol = true;
                }
                if SENTENCE_PUNCTUATION.contains(&c) {
                    saw_sentence_punct = true;
                }
            }
        }
    }

    if !word.is_empty() {
        items.push(Item::Word(Word::new(word)));
    } else if in_delimiter {
        flush_delimiter(saw_symbol, saw_sentence_punct, &mut items);
    }

    TokenStream { items }
}
