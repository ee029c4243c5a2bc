//! Lowercasing, tone-mark removal, noise filtering and clitic-boundary splitting.
//!
//! [`normalize`] applies the four steps in that order. Punctuation is removed
//! here once, so the tokenizer only has to split on whitespace.

use unicode_normalization::UnicodeNormalization;

use crate::mode::Mode;
use crate::text_io::Document;

const COMBINING_GRAVE: char = '\u{0300}';
const COMBINING_ACUTE: char = '\u{0301}';
const COMBINING_MACRON: char = '\u{0304}';

const CURRENCY: &[char] = &['£', '€', '₦', '$'];

/// Punctuation and special characters deleted from words. Hyphen and
/// apostrophe are absent: [`split_clitic_boundaries`] owns them.
const SYMBOLS: &[char] = &[
    ':', ';', '?', '!', '"', '\u{201C}', '\u{201D}', '{', '}', '+', '&', '[', ']', '<', '>', '/',
    '@', '*', '=', '^', '%', ',', '.', '(', ')',
];

const APOSTROPHES: &[char] = &['\'', '\u{2019}'];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormalizerConfig {
    mode: Mode,
    split_hyphens: bool,
    split_apostrophes: bool,
}

impl NormalizerConfig {
    pub fn new(mode: Mode) -> Self {
        match mode {
            Mode::Strict => Self {
                mode,
                split_hyphens: true,
                split_apostrophes: true,
            },
            // Golden tables keep "ihe-ngosi" and "na-akwunye" whole.
            Mode::PaperGolden => Self {
                mode,
                split_hyphens: false,
                split_apostrophes: true,
            },
        }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn split_hyphens(&self) -> bool {
        self.split_hyphens
    }

    pub fn split_apostrophes(&self) -> bool {
        self.split_apostrophes
    }
}

impl Default for NormalizerConfig {
    fn default() -> Self {
        Self::new(Mode::default())
    }
}

/// Kinds of non-Igbo data removed during normalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoiseClass {
    DigitBearing,
    Currency,
    DateTime,
    Symbol,
}

impl NoiseClass {
    /// Classifies a whitespace-delimited word, or `None` when it is clean.
    ///
    /// Digit-bearing words holding a `:` or `/` are reported as dates or times;
    /// both digit classes are deleted whole by [`remove_noise`].
    pub fn of_word(word: &str) -> Option<NoiseClass> {
        if word.chars().any(|c| c.is_ascii_digit()) {
            if word.contains([':', '/']) {
                return Some(NoiseClass::DateTime);
            }
            return Some(NoiseClass::DigitBearing);
        }
        if word.contains(CURRENCY) {
            return Some(NoiseClass::Currency);
        }
        if word.contains(SYMBOLS) {
            return Some(NoiseClass::Symbol);
        }
        None
    }
}

fn is_tone_mark(c: char) -> bool {
    matches!(c, COMBINING_GRAVE | COMBINING_ACUTE | COMBINING_MACRON)
}

fn is_deleted_char(c: char) -> bool {
    SYMBOLS.contains(&c) || CURRENCY.contains(&c)
}

/// Per-scalar lowercase mapping. Dotted vowels (Ị Ọ Ụ) map to their
/// precomposed lowercase forms.
pub fn to_lowercase(text: &str) -> String {
    text.chars().flat_map(char::to_lowercase).collect()
}

/// Removes grave, acute and macron tone marks. The dot below that belongs to
/// ị, ọ and ụ is kept. Works for precomposed and combining-sequence input.
pub fn strip_tone_marks(text: &str) -> String {
    text.nfd().filter(|&c| !is_tone_mark(c)).nfc().collect()
}

/// Drops digit-bearing words, deletes currency signs and listed symbols from
/// the remaining words, and rejoins with single spaces.
pub fn remove_noise(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for word in text.split_whitespace() {
        if word.chars().any(|c| c.is_ascii_digit()) {
            continue;
        }
        let start = out.len();
        if start > 0 {
            out.push(' ');
        }
        let body = out.len();
        out.extend(word.chars().filter(|&c| !is_deleted_char(c)));
        if out.len() == body {
            out.truncate(start);
        }
    }
    out
}

/// Turns hyphens and/or apostrophes into word boundaries as configured.
pub fn split_clitic_boundaries(text: &str, cfg: &NormalizerConfig) -> String {
    let is_boundary = |c: char| {
        (cfg.split_hyphens && c == '-') || (cfg.split_apostrophes && APOSTROPHES.contains(&c))
    };
    text.split(|c: char| c.is_whitespace() || is_boundary(c))
        .filter(|piece| !piece.is_empty())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn normalize_text(text: &str, cfg: &NormalizerConfig) -> String {
    let lowered = to_lowercase(text);
    let toneless = strip_tone_marks(&lowered);
    let clean = remove_noise(&toneless);
    split_clitic_boundaries(&clean, cfg)
}

pub fn normalize(doc: &Document, cfg: &NormalizerConfig) -> Document {
    Document::new(doc.id.clone(), normalize_text(&doc.text, cfg))
}
