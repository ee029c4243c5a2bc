//! Whitespace tokenization with optional clitic-prefix splitting.
//!
//! Input is expected to be normalized already: no tone marks, no listed
//! punctuation. The tokenizer does not repeat that work.

use serde::{Deserialize, Serialize};

use crate::fold_apostrophes;
use crate::mode::Mode;
use crate::text_io::Document;

pub const DEFAULT_CLITIC_PREFIXES: [&str; 9] = [
    "ga-", "aga-", "n\u{2019}", "na-", "ana-", "oga-", "iga-", "ona-", "ina-",
];

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Token {
    pub surface: String,
    pub index: usize,
}

/// Ordered tokens of one document. Indices run 0, 1, 2, ... without gaps.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TokenStream {
    pub doc_id: String,
    tokens: Vec<Token>,
}

impl TokenStream {
    /// Builds a stream from surfaces, assigning contiguous indices.
    /// Empty surfaces are skipped.
    pub fn from_surfaces<I, S>(doc_id: impl Into<String>, surfaces: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let tokens = surfaces
            .into_iter()
            .map(Into::into)
            .filter(|s: &String| !s.is_empty())
            .enumerate()
            .map(|(index, surface)| Token { surface, index })
            .collect();
        Self {
            doc_id: doc_id.into(),
            tokens,
        }
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn surfaces(&self) -> impl Iterator<Item = &str> + '_ {
        self.tokens.iter().map(|t| t.surface.as_str())
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Surfaces joined by single spaces.
    pub fn to_text(&self) -> String {
        self.surfaces().collect::<Vec<_>>().join(" ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenizerConfig {
    pub mode: Mode,
    pub clitic_prefixes: Vec<String>,
}

impl TokenizerConfig {
    pub fn new(mode: Mode) -> Self {
        Self {
            mode,
            clitic_prefixes: DEFAULT_CLITIC_PREFIXES.iter().map(|s| s.to_string()).collect(),
        }
    }

    /// Prefixes in canonical apostrophe form, longest first so that "ana-"
    /// wins over "na-".
    fn prefixes_longest_first(&self) -> Vec<String> {
        let mut prefixes: Vec<String> = self
            .clitic_prefixes
            .iter()
            .map(|p| fold_apostrophes(p))
            .filter(|p| !p.is_empty())
            .collect();
        prefixes.sort_by(|a, b| b.chars().count().cmp(&a.chars().count()).then(a.cmp(b)));
        prefixes.dedup();
        prefixes
    }
}

impl Default for TokenizerConfig {
    fn default() -> Self {
        Self::new(Mode::default())
    }
}

/// Peels clitic prefixes off the start of `word`, pushing each as its own token.
/// A word equal to a prefix is left whole.
fn split_clitics(word: &str, prefixes: &[String], out: &mut Vec<String>) {
    let folded = fold_apostrophes(word);
    let mut rest = folded.as_str();
    'peel: loop {
        for prefix in prefixes {
            if rest.len() > prefix.len() && rest.starts_with(prefix.as_str()) {
                out.push(prefix.clone());
                rest = &rest[prefix.len()..];
                continue 'peel;
            }
        }
        break;
    }
    if rest.len() == folded.len() {
        // untouched: keep the original apostrophe form
        out.push(word.to_string());
    } else {
        out.push(rest.to_string());
    }
}

pub fn tokenize(doc: &Document, cfg: &TokenizerConfig) -> TokenStream {
    let mut surfaces = Vec::new();
    match cfg.mode {
        Mode::PaperGolden => surfaces.extend(doc.text.split_whitespace().map(str::to_string)),
        Mode::Strict => {
            let prefixes = cfg.prefixes_longest_first();
            for word in doc.text.split_whitespace() {
                split_clitics(word, &prefixes, &mut surfaces);
            }
        }
    }
    TokenStream::from_surfaces(doc.id.clone(), surfaces)
}

pub fn token_count(ts: &TokenStream) -> usize {
    ts.len()
}
