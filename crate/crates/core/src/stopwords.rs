//! Stop-word lists and token filtering.
//!
//! List files are UTF-8 with entries separated by commas and/or newlines.

use std::collections::BTreeSet;

use unicode_normalization::UnicodeNormalization;

use crate::fold_apostrophes;
use crate::mode::Mode;
use crate::normalizer::to_lowercase;
use crate::text_io::{decode_utf8, DecodeError, RawBytes};
use crate::tokenizer::TokenStream;

/// The shipped default list.
pub const BUILTIN_STOPWORDS: &str = include_str!("../data/stopwords.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StopList {
    words: BTreeSet<String>,
    pub source: String,
}

/// Raised alongside a successfully loaded list that has no entries.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{list}: stop-word list is empty")]
pub struct EmptyListWarning {
    pub list: String,
}

fn canonical(word: &str) -> String {
    fold_apostrophes(&to_lowercase(word)).nfc().collect()
}

impl StopList {
    pub fn empty() -> Self {
        Self {
            words: BTreeSet::new(),
            source: "empty".to_string(),
        }
    }

    pub fn builtin() -> Self {
        let mut list = Self::parse(BUILTIN_STOPWORDS);
        list.source = "builtin".to_string();
        list
    }

    /// Splits on commas and line breaks, trims, drops empties, lowercases and dedups.
    pub fn parse(text: &str) -> Self {
        let words = text
            .split([',', '\n', '\r'])
            .map(str::trim)
            .filter(|w| !w.is_empty())
            .map(canonical)
            .collect();
        Self {
            words,
            source: String::new(),
        }
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word) || self.words.contains(&canonical(word))
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> + '_ {
        self.words.iter().map(String::as_str)
    }
}

/// Decodes and parses a stop-word file. An empty list is not an error; the
/// warning is returned next to it.
pub fn load_stoplist(raw: &RawBytes) -> Result<(StopList, Option<EmptyListWarning>), DecodeError> {
    let doc = decode_utf8(raw)?;
    let mut list = StopList::parse(&doc.text);
    list.source = raw.source_id.clone();
    let warning = list.is_empty().then(|| EmptyListWarning {
        list: raw.source_id.clone(),
    });
    Ok((list, warning))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StopFilterConfig {
    mode: Mode,
    min_token_length: usize,
}

impl StopFilterConfig {
    pub fn new(mode: Mode) -> Self {
        let min_token_length = match mode {
            Mode::Strict => 3,
            // "gi" and "hu" survive in the golden tables.
            Mode::PaperGolden => 0,
        };
        Self {
            mode,
            min_token_length,
        }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Minimum surviving token length in Unicode scalar values.
    pub fn min_token_length(&self) -> usize {
        self.min_token_length
    }
}

impl Default for StopFilterConfig {
    fn default() -> Self {
        Self::new(Mode::default())
    }
}

/// Drops stop words and too-short tokens; survivors are re-indexed from 0.
pub fn remove_stopwords(ts: &TokenStream, sl: &StopList, cfg: &StopFilterConfig) -> TokenStream {
    let kept = ts
        .surfaces()
        .filter(|s| s.chars().count() >= cfg.min_token_length && !sl.contains(s));
    TokenStream::from_surfaces(ts.doc_id.clone(), kept)
}
