//! On-disk TOML configuration for ingestion and tokenization.

use std::path::Path;

use serde::Deserialize;

use crate::corpus::IngestionConfig;
use crate::error::{Error, Result};
use crate::tokenize::TokenizerConfig;

/// The whole config file. Every section and key is optional; omitted parts
/// fall back to their defaults.
///
/// ```toml
/// [ingestion]
/// extensions = ["txt", "text"]
///
/// [tokenizer]
/// numbers_as_words = false
/// ```
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FileConfig {
    pub ingestion: IngestionConfig,
    pub tokenizer: TokenizerConfig,
}

/// Parse a TOML config file. Unknown sections or keys are errors, so typos
/// don't silently fall back to defaults.
pub fn load_config(path: &Path) -> Result<FileConfig> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Read {
        path: path.to_path_buf(),
        source: e,
    })?;
    toml::from_str(&text).map_err(|e| Error::Config {
        path: path.to_path_buf(),
        reason: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<FileConfig> {
        let file = tempfile::NamedTempFile::new().unwrap();
        std::fs::write(file.path(), text).unwrap();
        load_config(file.path())
    }

    #[test]
    fn full_config_parses() {
        let config = parse(
            "[ingestion]\nextensions = [\"txt\", \"text\"]\n\n[tokenizer]\nnumbers_as_words = false\n",
        )
        .unwrap();
        assert_eq!(config.ingestion.extensions, ["txt", "text"]);
        assert!(!config.tokenizer.numbers_as_words);
    }

    #[test]
    fn empty_config_gives_defaults() {
        let config = parse("").unwrap();
        assert_eq!(config, FileConfig::default());
        assert_eq!(config.ingestion.extensions, ["txt"]);
        assert!(config.tokenizer.numbers_as_words);
    }

    #[test]
    fn partial_sections_keep_other_defaults() {
        let config = parse("[tokenizer]\nnumbers_as_words = false\n").unwrap();
        assert!(!config.tokenizer.numbers_as_words);
        assert_eq!(config.ingestion.extensions, ["txt"]);
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let err = parse("[tokenizer]\nnumbrs_as_words = false\n").unwrap_err();
        assert!(matches!(err, Error::Config { .. }));
    }

    #[test]
    fn wrong_types_are_rejected() {
        let err = parse("[ingestion]\nextensions = \"txt\"\n").unwrap_err();
        assert!(matches!(err, Error::Config { .. }));
    }

    #[test]
    fn missing_file_is_a_read_error() {
        let err = load_config(Path::new("/no/such/config.toml")).unwrap_err();
        assert!(matches!(err, Error::Read { .. }));
    }
}
