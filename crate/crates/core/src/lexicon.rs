//! Igbo compound-word lexicon and key-feature matching.
//!
//! A lexicon file has one entry per line with three TAB-separated fields:
//! the phrase (space-separated words), a gloss, and the category name.
//! Lines starting with `#` and blank lines are skipped.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use unicode_normalization::UnicodeNormalization;

use crate::ngram::{LanguageModel, NGram, NGramTable};
use crate::normalizer::to_lowercase;
use crate::text_io::{decode_utf8, DecodeError, RawBytes};

/// The shipped lexicon.
pub const BUILTIN_LEXICON: &str = include_str!("../data/lexicon.tsv");

const MAX_PHRASE_WORDS: usize = 4;
const CONJUNCTION: &str = "na";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CompoundCategory {
    Nominal,
    Agentive,
    Duplicated,
    Coordinate,
    Proper,
    Derived,
}

impl CompoundCategory {
    pub const ALL: [CompoundCategory; 6] = [
        CompoundCategory::Nominal,
        CompoundCategory::Agentive,
        CompoundCategory::Duplicated,
        CompoundCategory::Coordinate,
        CompoundCategory::Proper,
        CompoundCategory::Derived,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CompoundCategory::Nominal => "Nominal",
            CompoundCategory::Agentive => "Agentive",
            CompoundCategory::Duplicated => "Duplicated",
            CompoundCategory::Coordinate => "Coordinate",
            CompoundCategory::Proper => "Proper",
            CompoundCategory::Derived => "Derived",
        }
    }

    /// Proper names and derived compounds are written as one word.
    fn written_together(self) -> bool {
        matches!(self, CompoundCategory::Proper | CompoundCategory::Derived)
    }
}

impl fmt::Display for CompoundCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CompoundCategory {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown category {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LexiconEntry {
    pub phrase: Vec<String>,
    pub gloss: String,
    pub category: CompoundCategory,
}

impl LexiconEntry {
    pub fn phrase_text(&self) -> String {
        self.phrase.join(" ")
    }

    /// Checks the category constraints, returning the violated rule.
    pub fn validate(&self) -> Result<(), String> {
        let len = self.phrase.len();
        if len == 0 || len > MAX_PHRASE_WORDS {
            return Err(format!("phrase must have 1..={MAX_PHRASE_WORDS} words"));
        }
        if self.phrase.iter().any(|w| w.is_empty() || to_lowercase(w) != *w) {
            return Err("phrase words must be non-empty and lowercase".into());
        }
        if self.category.written_together() {
            if len != 1 {
                return Err(format!("{} compounds are written as a single word", self.category));
            }
            return Ok(());
        }
        if len < 2 {
            return Err(format!("{} compounds need at least two words", self.category));
        }
        let repeated = all_identical(&self.phrase);
        match self.category {
            CompoundCategory::Duplicated if !repeated => {
                Err("Duplicated compounds repeat one word".into())
            }
            CompoundCategory::Coordinate if !has_interior_conjunction(&self.phrase) => {
                Err("Coordinate compounds need an interior \"na\"".into())
            }
            c if c != CompoundCategory::Duplicated && repeated => {
                Err("a phrase repeating one word must be Duplicated".into())
            }
            _ => Ok(()),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum LexiconError {
    #[error(transparent)]
    Decode(#[from] DecodeError),
    #[error("{source_id}:{line}: {reason}")]
    Format {
        source_id: String,
        line: usize,
        reason: String,
    },
    #[error("{source_id}:{line}: entry {phrase:?}: {rule}")]
    Invariant {
        source_id: String,
        line: usize,
        phrase: String,
        rule: String,
    },
}

fn all_identical<S: AsRef<str>>(words: &[S]) -> bool {
    words.windows(2).all(|w| w[0].as_ref() == w[1].as_ref())
}

fn has_interior_conjunction<S: AsRef<str>>(words: &[S]) -> bool {
    words.len() >= 3 && words[1..words.len() - 1].iter().any(|w| w.as_ref() == CONJUNCTION)
}

fn canonical_word(w: &str) -> String {
    to_lowercase(w).nfc().collect()
}

/// Parses lexicon text. `source_id` only labels errors.
pub fn parse_lexicon(text: &str, source_id: &str) -> Result<Vec<LexiconEntry>, LexiconError> {
    let mut entries = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let format_err = |reason: String| LexiconError::Format {
            source_id: source_id.to_string(),
            line: line_no,
            reason,
        };
        let fields: Vec<&str> = line.split('\t').collect();
        let [phrase, gloss, category] = fields[..] else {
            return Err(format_err(format!(
                "expected 3 TAB-separated fields, found {}",
                fields.len()
            )));
        };
        let category: CompoundCategory = category.trim().parse().map_err(format_err)?;
        let entry = LexiconEntry {
            phrase: phrase.split_whitespace().map(canonical_word).collect(),
            gloss: gloss.trim().to_string(),
            category,
        };
        entry.validate().map_err(|rule| LexiconError::Invariant {
            source_id: source_id.to_string(),
            line: line_no,
            phrase: entry.phrase_text(),
            rule,
        })?;
        entries.push(entry);
    }
    Ok(entries)
}

pub fn load_lexicon(raw: &RawBytes) -> Result<Vec<LexiconEntry>, LexiconError> {
    let doc = decode_utf8(raw)?;
    parse_lexicon(&doc.text, &raw.source_id)
}

pub fn builtin_lexicon() -> Vec<LexiconEntry> {
    parse_lexicon(BUILTIN_LEXICON, "builtin").expect("shipped lexicon is valid")
}

/// Writes entries back in the file format, one line each.
pub fn serialize_lexicon(entries: &[LexiconEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        out.push_str(&format!("{}\t{}\t{}\n", e.phrase_text(), e.gloss, e.category));
    }
    out
}

/// Surface-rule category detection. Only Duplicated and Coordinate are
/// visible from the words alone; everything else needs the lexicon.
pub fn detect_category<S: AsRef<str>>(phrase: &[S]) -> Option<CompoundCategory> {
    if phrase.len() >= 2 && all_identical(phrase) {
        Some(CompoundCategory::Duplicated)
    } else if has_interior_conjunction(phrase) {
        Some(CompoundCategory::Coordinate)
    } else {
        None
    }
}

/// A lexicon compound found among a document's n-grams.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KeyFeature {
    pub gram: Vec<String>,
    pub gloss: String,
    pub category: CompoundCategory,
    pub count: u64,
}

impl KeyFeature {
    pub fn ngram(&self) -> NGram {
        NGram::new(self.gram.iter().map(String::as_str))
    }
}

fn table_for(m: &LanguageModel, n: usize) -> Option<&NGramTable> {
    match n {
        1 => Some(&m.unigrams),
        2 => Some(&m.bigrams),
        3 => Some(&m.trigrams),
        _ => None,
    }
}

/// Lexicon phrases that occur in the model's table of the same order, with
/// that table's count. Sorted by descending count, then gram text.
pub fn match_key_features(m: &LanguageModel, lex: &[LexiconEntry]) -> Vec<KeyFeature> {
    let mut features: Vec<KeyFeature> = lex
        .iter()
        .filter_map(|entry| {
            let table = table_for(m, entry.phrase.len())?;
            let count = table.count(&NGram::new(entry.phrase.iter().map(String::as_str)));
            (count > 0).then(|| KeyFeature {
                gram: entry.phrase.clone(),
                gloss: entry.gloss.clone(),
                category: entry.category,
                count,
            })
        })
        .collect();
    features.sort_by(|a, b| {
        b.count
            .cmp(&a.count)
            .then_with(|| a.ngram().joined().cmp(&b.ngram().joined()))
            .then_with(|| a.gloss.cmp(&b.gloss))
    });
    features.dedup();
    features
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tokenizer::TokenStream;

    fn one(line: &str) -> Result<LexiconEntry, LexiconError> {
        parse_lexicon(line, "t").map(|mut v| v.remove(0))
    }

    #[test]
    fn parses_nominal() {
        let e = one("komputa nkunaka\tlaptop\tNominal").unwrap();
        assert_eq!(e.phrase, ["komputa", "nkunaka"]);
        assert_eq!(e.gloss, "laptop");
        assert_eq!(e.category, CompoundCategory::Nominal);
    }

    #[test]
    fn parses_coordinate() {
        let e = one("ezi na ụlọ\tfamily\tCoordinate").unwrap();
        assert_eq!(e.category, CompoundCategory::Coordinate);
    }

    #[test]
    fn rejects_duplicated_words_outside_duplicated() {
        match one("mmiri mmiri\twatery\tNominal") {
            Err(LexiconError::Invariant { line, phrase, .. }) => {
                assert_eq!(line, 1);
                assert_eq!(phrase, "mmiri mmiri");
            }
            other => panic!("expected invariant error, got {other:?}"),
        }
    }

    #[test]
    fn other_invariants() {
        assert!(one("uche chukwu\tname\tProper").is_err());
        assert!(one("ụlọ\thouse\tNominal").is_err());
        assert!(one("ezi ụlọ\tfamily\tCoordinate").is_err());
        assert!(one("na ezi\tx\tCoordinate").is_err());
        assert!(one("mmiri ọkụ\tx\tDuplicated").is_err());
        assert!(one("a b c d e\tx\tNominal").is_err());
        assert!(one("dinweulo\tlandlord\tDerived").is_ok());
    }

    #[test]
    fn format_errors_name_the_line() {
        match parse_lexicon("# header\nkomputa nkunaka\tlaptop\n", "lex.tsv") {
            Err(LexiconError::Format { line, source_id, .. }) => {
                assert_eq!(line, 2);
                assert_eq!(source_id, "lex.tsv");
            }
            other => panic!("expected format error, got {other:?}"),
        }
        assert!(matches!(
            parse_lexicon("a b\tx\tDuplicate\n", "t"),
            Err(LexiconError::Format { .. })
        ));
        assert!(matches!(
            load_lexicon(&RawBytes::new("t", vec![0xC0])),
            Err(LexiconError::Decode(_))
        ));
    }

    #[test]
    fn uppercase_input_is_lowered() {
        let e = one("Komputa Nkunaka\tLaptop\tNominal").unwrap();
        assert_eq!(e.phrase, ["komputa", "nkunaka"]);
    }

    #[test]
    fn builtin_round_trips() {
        let entries = builtin_lexicon();
        assert!(entries.len() >= 25);
        let again = parse_lexicon(&serialize_lexicon(&entries), "rt").unwrap();
        assert_eq!(again, entries);
    }

    #[test]
    fn detects_surface_categories() {
        assert_eq!(detect_category(&["mmiri", "mmiri"]), Some(CompoundCategory::Duplicated));
        assert_eq!(
            detect_category(&["ọsọ", "ọsọ", "ọsọ"]),
            Some(CompoundCategory::Duplicated)
        );
        assert_eq!(detect_category(&["ezi", "na", "ụlọ"]), Some(CompoundCategory::Coordinate));
        assert_eq!(detect_category(&["ụlọ", "akwukwo"]), None);
        assert_eq!(detect_category(&["na", "ụlọ"]), None);
        assert_eq!(detect_category(&["dinweulo"]), None);
    }

    #[test]
    fn matches_features() {
        let ts = TokenStream::from_surfaces(
            "d",
            "komputa nkunaka iji komputa nkunaka okwu ntughe".split(' '),
        );
        let m = LanguageModel::from_stream(&ts);
        let feats = match_key_features(&m, &builtin_lexicon());
        assert_eq!(feats.len(), 2);
        assert_eq!(feats[0].gram, ["komputa", "nkunaka"]);
        assert_eq!(feats[0].count, 2);
        assert_eq!(feats[1].gloss, "password");
        assert!(match_key_features(&m, &[]).is_empty());
    }
}
