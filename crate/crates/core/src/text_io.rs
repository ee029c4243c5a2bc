//! Strict UTF-8 decoding and encoding of Igbo documents, and corpus loading.

use std::fs;
use std::path::{Path, PathBuf};

use crate::par;

const BOM: &[u8] = b"\xEF\xBB\xBF";

/// Undecoded file contents together with the identifier of their source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawBytes {
    pub bytes: Vec<u8>,
    pub source_id: String,
}

impl RawBytes {
    pub fn new(source_id: impl Into<String>, bytes: impl Into<Vec<u8>>) -> Self {
        Self {
            bytes: bytes.into(),
            source_id: source_id.into(),
        }
    }
}

/// A decoded text. `String` already rules out surrogates and invalid scalars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub id: String,
    pub text: String,
}

impl Document {
    pub fn new(id: impl Into<String>, text: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            text: text.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{source_id}: invalid UTF-8 at byte offset {offset}")]
pub struct DecodeError {
    pub source_id: String,
    /// Offset of the first byte of the first invalid sequence, counted from
    /// the start of the input including any byte-order mark.
    pub offset: usize,
}

#[derive(Debug, thiserror::Error)]
pub enum TextIoError {
    #[error(transparent)]
    Decode(#[from] DecodeError),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// Decodes `raw` as UTF-8 without replacement. A leading byte-order mark is dropped.
pub fn decode_utf8(raw: &RawBytes) -> Result<Document, DecodeError> {
    let (skipped, body) = match raw.bytes.strip_prefix(BOM) {
        Some(rest) => (BOM.len(), rest),
        None => (0, raw.bytes.as_slice()),
    };
    match std::str::from_utf8(body) {
        Ok(text) => Ok(Document::new(raw.source_id.clone(), text)),
        Err(e) => Err(DecodeError {
            source_id: raw.source_id.clone(),
            offset: skipped + e.valid_up_to(),
        }),
    }
}

pub fn encode_utf8(doc: &Document) -> RawBytes {
    RawBytes::new(doc.id.clone(), doc.text.as_bytes())
}

pub fn read_raw(path: &Path) -> Result<RawBytes, TextIoError> {
    let bytes = fs::read(path).map_err(|source| TextIoError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(RawBytes::new(path.display().to_string(), bytes))
}

pub fn load_document(path: &Path) -> Result<Document, TextIoError> {
    Ok(decode_utf8(&read_raw(path)?)?)
}

/// Loads one document per path, in input order. Files are read concurrently
/// when the `parallel` feature is on; the first failing path (in input order)
/// is reported.
pub fn load_corpus<P: AsRef<Path> + Sync>(paths: &[P]) -> Result<Vec<Document>, TextIoError> {
    par::map(paths, |p| load_document(p.as_ref()))
        .into_iter()
        .collect()
}
