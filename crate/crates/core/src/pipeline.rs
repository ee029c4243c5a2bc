//! End-to-end representation: normalize, tokenize, filter, count.

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use crate::export::OutputFormat;
use crate::lexicon::{builtin_lexicon, load_lexicon, match_key_features, KeyFeature, LexiconEntry, LexiconError};
use crate::mode::Mode;
use crate::ngram::{extract_ngrams, merge_tables, rank_features, LanguageModel, NGram, NGramTable, NgramError, MERGED_DOC_ID};
use crate::normalizer::{normalize, NormalizerConfig};
use crate::par;
use crate::stopwords::{load_stoplist, remove_stopwords, EmptyListWarning, StopFilterConfig, StopList};
use crate::text_io::{read_raw, Document, TextIoError};
use crate::tokenizer::{tokenize, TokenStream, TokenizerConfig};

/// Where the compound lexicon comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LexiconSource {
    Builtin,
    File(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineConfig {
    pub mode: Mode,
    /// `None` selects the shipped stop-word list.
    pub stoplist_path: Option<PathBuf>,
    pub lexicon: Option<LexiconSource>,
    pub orders: BTreeSet<usize>,
    pub output_format: OutputFormat,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        Self {
            mode: Mode::default(),
            stoplist_path: None,
            lexicon: None,
            orders: BTreeSet::from([1, 2, 3]),
            output_format: OutputFormat::default(),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum PipelineError {
    #[error("config: {0}")]
    Config(String),
    #[error("stop-word list: {0}")]
    StopList(#[source] TextIoError),
    #[error("lexicon: {0}")]
    LexiconIo(#[source] TextIoError),
    #[error("lexicon: {0}")]
    Lexicon(#[source] LexiconError),
    #[error("n-gram extraction: {0}")]
    Extract(#[source] NgramError),
    #[error("document-term matrix: {0}")]
    Matrix(#[source] NgramError),
}

/// Per-document output: one table per requested order, plus matched compounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationBundle {
    pub doc_id: String,
    pub tables: BTreeMap<usize, NGramTable>,
    pub features: Option<Vec<KeyFeature>>,
}

/// A loaded, ready-to-run pipeline. Holds no mutable state, so one instance
/// can serve many documents concurrently.
#[derive(Debug, Clone)]
pub struct Pipeline {
    normalizer: NormalizerConfig,
    tokenizer: TokenizerConfig,
    filter: StopFilterConfig,
    stoplist: StopList,
    lexicon: Option<Vec<LexiconEntry>>,
    orders: BTreeSet<usize>,
    warnings: Vec<EmptyListWarning>,
}

impl Pipeline {
    pub fn from_config(cfg: &PipelineConfig) -> Result<Self, PipelineError> {
        let (stoplist, warning) = match &cfg.stoplist_path {
            None => (StopList::builtin(), None),
            Some(path) => {
                let raw = read_raw(path).map_err(PipelineError::StopList)?;
                load_stoplist(&raw).map_err(|e| PipelineError::StopList(e.into()))?
            }
        };
        let lexicon = match &cfg.lexicon {
            None => None,
            Some(LexiconSource::Builtin) => Some(builtin_lexicon()),
            Some(LexiconSource::File(path)) => {
                let raw = read_raw(path).map_err(PipelineError::LexiconIo)?;
                Some(load_lexicon(&raw).map_err(PipelineError::Lexicon)?)
            }
        };
        let mut pipeline = Self::new(cfg.mode, stoplist, lexicon, cfg.orders.clone())?;
        pipeline.warnings.extend(warning);
        Ok(pipeline)
    }

    pub fn new(
        mode: Mode,
        stoplist: StopList,
        lexicon: Option<Vec<LexiconEntry>>,
        orders: BTreeSet<usize>,
    ) -> Result<Self, PipelineError> {
        if orders.is_empty() {
            return Err(PipelineError::Config("at least one n-gram order is required".into()));
        }
        if let Some(&bad) = orders.iter().find(|n| !(1..=3).contains(*n)) {
            return Err(PipelineError::Extract(NgramError::InvalidOrder(bad)));
        }
        Ok(Self {
            normalizer: NormalizerConfig::new(mode),
            tokenizer: TokenizerConfig::new(mode),
            filter: StopFilterConfig::new(mode),
            stoplist,
            lexicon,
            orders,
            warnings: Vec::new(),
        })
    }

    pub fn mode(&self) -> Mode {
        self.normalizer.mode()
    }

    pub fn orders(&self) -> &BTreeSet<usize> {
        &self.orders
    }

    pub fn stoplist(&self) -> &StopList {
        &self.stoplist
    }

    pub fn warnings(&self) -> &[EmptyListWarning] {
        &self.warnings
    }

    pub fn normalize(&self, doc: &Document) -> Document {
        normalize(doc, &self.normalizer)
    }

    /// Normalized and tokenized, before stop-word removal.
    pub fn tokenize(&self, doc: &Document) -> TokenStream {
        tokenize(&self.normalize(doc), &self.tokenizer)
    }

    /// The stream n-grams are counted over.
    pub fn filtered_tokens(&self, doc: &Document) -> TokenStream {
        remove_stopwords(&self.tokenize(doc), &self.stoplist, &self.filter)
    }

    pub fn run(&self, doc: &Document) -> Result<RepresentationBundle, PipelineError> {
        let filtered = self.filtered_tokens(doc);
        let tables = self
            .orders
            .iter()
            .map(|&n| Ok((n, extract_ngrams(&filtered, n).map_err(PipelineError::Extract)?)))
            .collect::<Result<BTreeMap<_, _>, PipelineError>>()?;
        let features = self
            .lexicon
            .as_ref()
            .map(|lex| match_key_features(&LanguageModel::from_stream(&filtered), lex));
        Ok(RepresentationBundle {
            doc_id: doc.id.clone(),
            tables,
            features,
        })
    }

    /// Runs every document, in parallel when the `parallel` feature is on.
    pub fn run_corpus(&self, docs: &[Document]) -> Result<Vec<RepresentationBundle>, PipelineError> {
        par::map(docs, |d| self.run(d)).into_iter().collect()
    }

    pub fn run_corpus_sequential(
        &self,
        docs: &[Document],
    ) -> Result<Vec<RepresentationBundle>, PipelineError> {
        docs.iter().map(|d| self.run(d)).collect()
    }
}

/// Runs one document through a pipeline built from `cfg`.
pub fn run_pipeline(doc: &Document, cfg: &PipelineConfig) -> Result<RepresentationBundle, PipelineError> {
    Pipeline::from_config(cfg)?.run(doc)
}

/// Documents × features count matrix for one n-gram order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocTermMatrix {
    pub n: usize,
    pub docs: Vec<String>,
    /// Ranked by merged count, ties by gram text.
    pub features: Vec<NGram>,
    /// `cells[doc][feature]`.
    pub cells: Vec<Vec<u64>>,
}

impl DocTermMatrix {
    pub fn row_sum(&self, doc: usize) -> u64 {
        self.cells[doc].iter().sum()
    }

    pub fn column_sum(&self, feature: usize) -> u64 {
        self.cells.iter().map(|row| row[feature]).sum()
    }
}

fn order_tables(bundles: &[RepresentationBundle], n: usize) -> Result<Vec<&NGramTable>, PipelineError> {
    bundles
        .iter()
        .map(|b| {
            b.tables.get(&n).ok_or(PipelineError::Matrix(NgramError::OrderMismatch {
                left: n,
                right: b.tables.keys().next().copied().unwrap_or(0),
            }))
        })
        .collect()
}

fn assemble(n: usize, bundles: &[RepresentationBundle], tables: &[&NGramTable], merged: &NGramTable) -> DocTermMatrix {
    let features: Vec<NGram> = rank_features(merged, merged.distinct())
        .into_iter()
        .map(|(g, _)| g)
        .collect();
    let cells = par::map(tables, |t| features.iter().map(|g| t.count(g)).collect());
    DocTermMatrix {
        n,
        docs: bundles.iter().map(|b| b.doc_id.clone()).collect(),
        features,
        cells,
    }
}

/// Merges the per-document order-`n` tables (a parallel reduction when the
/// `parallel` feature is on) and lays the counts out on the ranked feature axis.
pub fn build_doc_term_matrix(
    bundles: &[RepresentationBundle],
    n: usize,
) -> Result<DocTermMatrix, PipelineError> {
    let tables = order_tables(bundles, n)?;
    let merged = par::reduce(
        tables.iter().map(|t| (*t).clone()).collect(),
        || NGramTable::empty(n, MERGED_DOC_ID),
        |a, b| merge_tables(&a, &b).expect("same order"),
    );
    Ok(assemble(n, bundles, &tables, &merged))
}

pub fn build_doc_term_matrix_sequential(
    bundles: &[RepresentationBundle],
    n: usize,
) -> Result<DocTermMatrix, PipelineError> {
    let tables = order_tables(bundles, n)?;
    let mut merged = NGramTable::empty(n, MERGED_DOC_ID);
    for t in &tables {
        merged = merge_tables(&merged, t).map_err(PipelineError::Matrix)?;
    }
    Ok(assemble(n, bundles, &tables, &merged))
}
