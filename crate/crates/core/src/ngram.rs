//! Word n-gram frequency tables and unsmoothed maximum-likelihood estimates.
//!
//! Windows are taken over the filtered token stream, so they run across
//! removed stop words and sentence ends. There are no boundary symbols.

use std::collections::HashMap;
use std::fmt;

use unicode_normalization::UnicodeNormalization;

use crate::tokenizer::TokenStream;

pub const MIN_ORDER: usize = 1;
pub const MAX_ORDER: usize = 3;

pub const MERGED_DOC_ID: &str = "merged";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NgramError {
    #[error("n-gram order {0} outside {MIN_ORDER}..={MAX_ORDER}")]
    InvalidOrder(usize),
    #[error("cannot combine order-{left} and order-{right} tables")]
    OrderMismatch { left: usize, right: usize },
    #[error("language model has no unigram windows")]
    EmptyModel,
    #[error("context {0:?} has no observed continuation")]
    UnknownContext(String),
    #[error("table counts sum to {sum} but total_windows is {total}")]
    TotalMismatch { sum: u64, total: u64 },
}

/// An ordered tuple of words.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NGram(Vec<String>);

impl NGram {
    pub fn new<I, S>(words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self(words.into_iter().map(Into::into).collect())
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn words(&self) -> &[String] {
        &self.0
    }

    /// Words joined by single spaces, canonically composed.
    pub fn joined(&self) -> String {
        self.0.join(" ").nfc().collect()
    }
}

impl fmt::Display for NGram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.join(" "))
    }
}

impl<S: Into<String>> FromIterator<S> for NGram {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        Self::new(iter)
    }
}

fn check_order(n: usize) -> Result<(), NgramError> {
    if (MIN_ORDER..=MAX_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(NgramError::InvalidOrder(n))
    }
}

/// Counts every contiguous window of `n` words. Works for any `n >= 1`.
pub(crate) fn count_windows<S: AsRef<str>>(words: &[S], n: usize) -> HashMap<NGram, u64> {
    let mut counts = HashMap::new();
    if n == 0 {
        return counts;
    }
    for window in words.windows(n) {
        let gram = NGram::new(window.iter().map(|w| w.as_ref()));
        *counts.entry(gram).or_insert(0) += 1;
    }
    counts
}

/// Frequency table of order-`n` word tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NGramTable {
    n: usize,
    counts: HashMap<NGram, u64>,
    total_windows: u64,
    pub doc_id: String,
}

impl NGramTable {
    pub fn empty(n: usize, doc_id: impl Into<String>) -> Self {
        Self {
            n,
            counts: HashMap::new(),
            total_windows: 0,
            doc_id: doc_id.into(),
        }
    }

    /// Rebuilds a table from stored counts, checking order, positivity and totals.
    pub fn from_counts<I>(
        n: usize,
        doc_id: impl Into<String>,
        total_windows: u64,
        entries: I,
    ) -> Result<Self, NgramError>
    where
        I: IntoIterator<Item = (NGram, u64)>,
    {
        check_order(n)?;
        let mut counts = HashMap::new();
        for (gram, count) in entries {
            if gram.order() != n {
                return Err(NgramError::OrderMismatch {
                    left: n,
                    right: gram.order(),
                });
            }
            if count > 0 {
                *counts.entry(gram).or_insert(0) += count;
            }
        }
        let sum: u64 = counts.values().sum();
        if sum != total_windows {
            return Err(NgramError::TotalMismatch {
                sum,
                total: total_windows,
            });
        }
        Ok(Self {
            n,
            counts,
            total_windows,
            doc_id: doc_id.into(),
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn total_windows(&self) -> u64 {
        self.total_windows
    }

    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn count(&self, gram: &NGram) -> u64 {
        self.counts.get(gram).copied().unwrap_or(0)
    }

    pub fn count_of(&self, words: &[&str]) -> u64 {
        self.count(&NGram::new(words.iter().copied()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&NGram, u64)> + '_ {
        self.counts.iter().map(|(g, &c)| (g, c))
    }
}

pub fn extract_ngrams(ts: &TokenStream, n: usize) -> Result<NGramTable, NgramError> {
    check_order(n)?;
    let words: Vec<&str> = ts.surfaces().collect();
    let counts = count_windows(&words, n);
    let total_windows = (words.len() + 1).saturating_sub(n) as u64;
    Ok(NGramTable {
        n,
        counts,
        total_windows,
        doc_id: ts.doc_id.clone(),
    })
}

/// Pointwise sum of two same-order tables.
pub fn merge_tables(a: &NGramTable, b: &NGramTable) -> Result<NGramTable, NgramError> {
    if a.n != b.n {
        return Err(NgramError::OrderMismatch {
            left: a.n,
            right: b.n,
        });
    }
    let mut counts = a.counts.clone();
    for (gram, &c) in &b.counts {
        *counts.entry(gram.clone()).or_insert(0) += c;
    }
    Ok(NGramTable {
        n: a.n,
        counts,
        total_windows: a.total_windows + b.total_windows,
        doc_id: MERGED_DOC_ID.to_string(),
    })
}

/// Descending count, ties by ascending composed gram text. Returns at most `k`.
pub fn rank_features(t: &NGramTable, k: usize) -> Vec<(NGram, u64)> {
    let mut entries: Vec<(String, &NGram, u64)> =
        t.counts.iter().map(|(g, &c)| (g.joined(), g, c)).collect();
    entries.sort_by(|a, b| b.2.cmp(&a.2).then_with(|| a.0.cmp(&b.0)));
    entries
        .into_iter()
        .take(k)
        .map(|(_, g, c)| (g.clone(), c))
        .collect()
}

/// Unigram, bigram and trigram tables built from the same stream(s).
///
/// Conditionals divide by the number of windows that extend the context by
/// one more word, so every observed context's continuations sum to one.
#[derive(Debug, Clone)]
pub struct LanguageModel {
    pub unigrams: NGramTable,
    pub bigrams: NGramTable,
    pub trigrams: NGramTable,
    unigram_contexts: HashMap<String, u64>,
    bigram_contexts: HashMap<(String, String), u64>,
}

impl LanguageModel {
    pub fn from_stream(ts: &TokenStream) -> Self {
        // orders 1..=3 are always valid
        let table = |n| extract_ngrams(ts, n).expect("order in range");
        Self::build(table(1), table(2), table(3))
    }

    pub fn from_tables(
        unigrams: NGramTable,
        bigrams: NGramTable,
        trigrams: NGramTable,
    ) -> Result<Self, NgramError> {
        for (expected, t) in [(1, &unigrams), (2, &bigrams), (3, &trigrams)] {
            if t.order() != expected {
                return Err(NgramError::OrderMismatch {
                    left: expected,
                    right: t.order(),
                });
            }
        }
        Ok(Self::build(unigrams, bigrams, trigrams))
    }

    fn build(unigrams: NGramTable, bigrams: NGramTable, trigrams: NGramTable) -> Self {
        let mut unigram_contexts = HashMap::new();
        for (g, c) in bigrams.iter() {
            *unigram_contexts.entry(g.words()[0].clone()).or_insert(0) += c;
        }
        let mut bigram_contexts = HashMap::new();
        for (g, c) in trigrams.iter() {
            let w = g.words();
            *bigram_contexts
                .entry((w[0].clone(), w[1].clone()))
                .or_insert(0) += c;
        }
        Self {
            unigrams,
            bigrams,
            trigrams,
            unigram_contexts,
            bigram_contexts,
        }
    }

    /// Total number of continuations observed after `w`.
    pub fn context_total(&self, w: &str) -> u64 {
        self.unigram_contexts.get(w).copied().unwrap_or(0)
    }

    /// Total number of continuations observed after `(w1, w2)`.
    pub fn pair_context_total(&self, w1: &str, w2: &str) -> u64 {
        self.bigram_contexts
            .get(&(w1.to_string(), w2.to_string()))
            .copied()
            .unwrap_or(0)
    }

    /// Unigram contexts with at least one continuation.
    pub fn unigram_contexts(&self) -> impl Iterator<Item = (&str, u64)> + '_ {
        self.unigram_contexts.iter().map(|(w, &c)| (w.as_str(), c))
    }

    /// Bigram contexts with at least one continuation.
    pub fn bigram_contexts(&self) -> impl Iterator<Item = ((&str, &str), u64)> + '_ {
        self.bigram_contexts
            .iter()
            .map(|((a, b), &c)| ((a.as_str(), b.as_str()), c))
    }

    pub fn unigram_probability(&self, w: &str) -> Result<f64, NgramError> {
        let total = self.unigrams.total_windows();
        if total == 0 {
            return Err(NgramError::EmptyModel);
        }
        Ok(self.unigrams.count_of(&[w]) as f64 / total as f64)
    }

    /// Product of unigram probabilities; the empty sequence has probability 1.
    pub fn sequence_probability_unigram<S: AsRef<str>>(&self, ws: &[S]) -> Result<f64, NgramError> {
        if self.unigrams.total_windows() == 0 {
            return Err(NgramError::EmptyModel);
        }
        ws.iter()
            .try_fold(1.0, |p, w| Ok(p * self.unigram_probability(w.as_ref())?))
    }

    /// P(w2 | w1) = count(w1, w2) / count(w1, ·).
    pub fn bigram_conditional(&self, w1: &str, w2: &str) -> Result<f64, NgramError> {
        let context = self.context_total(w1);
        if context == 0 {
            return Err(NgramError::UnknownContext(w1.to_string()));
        }
        Ok(self.bigrams.count_of(&[w1, w2]) as f64 / context as f64)
    }

    /// P(w1) times P(w_i | w_{i-1}) for each following word. An unseen word or
    /// context makes the whole sequence 0.
    pub fn sequence_probability_bigram<S: AsRef<str>>(&self, ws: &[S]) -> Result<f64, NgramError> {
        let Some(first) = ws.first() else {
            if self.unigrams.total_windows() == 0 {
                return Err(NgramError::EmptyModel);
            }
            return Ok(1.0);
        };
        let mut p = self.unigram_probability(first.as_ref())?;
        for pair in ws.windows(2) {
            if p == 0.0 {
                break;
            }
            p *= match self.bigram_conditional(pair[0].as_ref(), pair[1].as_ref()) {
                Ok(q) => q,
                Err(NgramError::UnknownContext(_)) => 0.0,
                Err(e) => return Err(e),
            };
        }
        Ok(p)
    }

    /// P(w3 | w1, w2) = count(w1, w2, w3) / count(w1, w2, ·).
    pub fn trigram_conditional(&self, w1: &str, w2: &str, w3: &str) -> Result<f64, NgramError> {
        let context = self.pair_context_total(w1, w2);
        if context == 0 {
            return Err(NgramError::UnknownContext(format!("{w1} {w2}")));
        }
        Ok(self.trigrams.count_of(&[w1, w2, w3]) as f64 / context as f64)
    }
}
