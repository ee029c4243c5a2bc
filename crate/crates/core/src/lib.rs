//! Text representation toolkit for Igbo documents.
//!
//! The pipeline runs in fixed stages:
//!
//! 1. [`text_io`] strict UTF-8 decoding of raw bytes into [`Document`]s,
//! 2. [`normalizer`] lowercasing, tone-mark stripping and noise removal,
//! 3. [`tokenizer`] whitespace and clitic-prefix segmentation,
//! 4. [`stopwords`] stop-word and short-token filtering,
//! 5. [`ngram`] word n-gram tables (n = 1..3) and unsmoothed MLE probabilities.
//!
//! [`lexicon`] matches extracted n-grams against a compound-word lexicon, and
//! [`pipeline`] wires the stages together for single documents and corpora.
//! Every stage is configured by a [`Mode`]: `PaperGolden` reproduces the
//! reference Doc1 tables, `Strict` follows the written algorithms literally.

pub mod export;
pub mod lexicon;
pub mod mode;
pub mod ngram;
pub mod normalizer;
mod par;
pub mod pipeline;
pub mod stopwords;
pub mod text_io;
pub mod tokenizer;

pub use lexicon::{CompoundCategory, KeyFeature, LexiconEntry};
pub use mode::Mode;
pub use ngram::{LanguageModel, NGram, NGramTable};
pub use normalizer::NormalizerConfig;
pub use pipeline::{DocTermMatrix, Pipeline, PipelineConfig, RepresentationBundle};
pub use stopwords::{StopFilterConfig, StopList};
pub use text_io::{Document, RawBytes};
pub use tokenizer::{Token, TokenStream, TokenizerConfig};

/// Apostrophe form used for every stored and compared clitic or stop word.
pub const APOSTROPHE: char = '\u{2019}';

/// Maps the ASCII apostrophe onto [`APOSTROPHE`]; all other text is unchanged.
pub fn fold_apostrophes(s: &str) -> String {
    s.replace('\'', "\u{2019}")
}
