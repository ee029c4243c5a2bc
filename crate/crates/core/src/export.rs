//! TSV and JSON serialization of tables, bundles, key features and matrices.
//!
//! Table TSV is one `gram<TAB>count` line per entry in rank order, with no
//! header. Table JSON is `{doc_id, n, total, entries: [{gram, count}]}`.
//! Output is byte-for-byte deterministic for identical input.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::lexicon::KeyFeature;
use crate::ngram::{rank_features, NGram, NGramTable, NgramError};
use crate::pipeline::{DocTermMatrix, RepresentationBundle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Tsv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tsv" => Ok(OutputFormat::Tsv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format {other:?} (expected tsv or json)")),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Tsv => "tsv",
            OutputFormat::Json => "json",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub gram: Vec<String>,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub doc_id: String,
    pub n: usize,
    pub total: u64,
    pub entries: Vec<EntryJson>,
}

impl From<&NGramTable> for TableJson {
    fn from(t: &NGramTable) -> Self {
        Self {
            doc_id: t.doc_id.clone(),
            n: t.order(),
            total: t.total_windows(),
            entries: rank_features(t, t.distinct())
                .into_iter()
                .map(|(g, count)| EntryJson {
                    gram: g.words().to_vec(),
                    count,
                })
                .collect(),
        }
    }
}

impl TryFrom<TableJson> for NGramTable {
    type Error = NgramError;

    fn try_from(j: TableJson) -> Result<Self, Self::Error> {
        NGramTable::from_counts(
            j.n,
            j.doc_id,
            j.total,
            j.entries.into_iter().map(|e| (NGram::new(e.gram), e.count)),
        )
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Table(#[from] NgramError),
    #[error("tables belong to different documents: {0:?} and {1:?}")]
    MixedDocuments(String, String),
}

pub fn table_to_tsv(t: &NGramTable) -> String {
    let mut out = String::new();
    for (gram, count) in rank_features(t, t.distinct()) {
        out.push_str(&gram.joined());
        out.push('\t');
        out.push_str(&count.to_string());
        out.push('\n');
    }
    out
}

fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn table_to_json(t: &NGramTable) -> String {
    to_json_string(&TableJson::from(t))
}

/// Tables in ascending order, non-empty sections separated by a blank line.
pub fn bundle_to_tsv(b: &RepresentationBundle) -> String {
    b.tables
        .values()
        .map(table_to_tsv)
        .filter(|s| !s.is_empty())
        .collect::<Vec<_>>()
        .join("\n")
}

/// A single-order bundle is written as one table object; several orders as an
/// array of table objects in ascending order.
pub fn bundle_to_json(b: &RepresentationBundle) -> String {
    let tables: Vec<TableJson> = b.tables.values().map(TableJson::from).collect();
    if tables.len() == 1 {
        to_json_string(&tables[0])
    } else {
        to_json_string(&tables)
    }
}

/// Inverse of [`bundle_to_json`]. Key features are not part of the format.
pub fn bundle_from_json(s: &str) -> Result<RepresentationBundle, ParseError> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum OneOrMany {
        One(TableJson),
        Many(Vec<TableJson>),
    }
    let tables = match serde_json::from_str(s)? {
        OneOrMany::One(t) => vec![t],
        OneOrMany::Many(ts) => ts,
    };
    let mut doc_id: Option<String> = None;
    let mut out = BTreeMap::new();
    for t in tables {
        match &doc_id {
            Some(id) if *id != t.doc_id => {
                return Err(ParseError::MixedDocuments(id.clone(), t.doc_id));
            }
            None => doc_id = Some(t.doc_id.clone()),
            _ => {}
        }
        let table = NGramTable::try_from(t)?;
        out.insert(table.order(), table);
    }
    Ok(RepresentationBundle {
        doc_id: doc_id.unwrap_or_default(),
        tables: out,
        features: None,
    })
}

/// `gram<TAB>gloss<TAB>category<TAB>count` per feature.
pub fn features_to_tsv(features: &[KeyFeature]) -> String {
    let mut out = String::new();
    for f in features {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\n",
            f.ngram().joined(),
            f.gloss,
            f.category,
            f.count
        ));
    }
    out
}

#[derive(Serialize)]
struct FeaturesJson<'a> {
    doc_id: &'a str,
    features: &'a [KeyFeature],
}

pub fn features_to_json(doc_id: &str, features: &[KeyFeature]) -> String {
    to_json_string(&FeaturesJson { doc_id, features })
}

/// Header row `doc_id<TAB>feature...`, then one row of counts per document.
pub fn matrix_to_tsv(m: &DocTermMatrix) -> String {
    let mut out = String::from("doc_id");
    for f in &m.features {
        out.push('\t');
        out.push_str(&f.joined());
    }
    out.push('\n');
    for (doc, row) in m.docs.iter().zip(&m.cells) {
        out.push_str(doc);
        for c in row {
            out.push('\t');
            out.push_str(&c.to_string());
        }
        out.push('\n');
    }
    out
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    n: usize,
    docs: Vec<String>,
    features: Vec<Vec<String>>,
    cells: Vec<Vec<u64>>,
}

pub fn matrix_to_json(m: &DocTermMatrix) -> String {
    to_json_string(&MatrixJson {
        n: m.n,
        docs: m.docs.clone(),
        features: m.features.iter().map(|g| g.words().to_vec()).collect(),
        cells: m.cells.clone(),
    })
}

pub fn matrix_from_json(s: &str) -> Result<DocTermMatrix, ParseError> {
    let j: MatrixJson = serde_json::from_str(s)?;
    Ok(DocTermMatrix {
        n: j.n,
        docs: j.docs,
        features: j.features.into_iter().map(NGram::new).collect(),
        cells: j.cells,
    })
}

/// Writes to `dest`, or to stdout when `dest` is `None`.
pub fn write_output(dest: Option<&Path>, content: &str) -> io::Result<()> {
    match dest {
        Some(path) => fs::write(path, content),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(content.as_bytes())?;
            out.flush()
        }
    }
}
