//! Command-line front end for the Igbo n-gram representation pipeline.
//!
//! Exit codes: 0 success, 1 usage error, 2 decode error, 3 I/O error,
//! 4 format or invariant error in a data file.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use igbo_ngram::export::{self, OutputFormat};
use igbo_ngram::lexicon::LexiconError;
use igbo_ngram::pipeline::{build_doc_term_matrix, LexiconSource, PipelineError};
use igbo_ngram::text_io::{load_corpus, load_document, TextIoError};
use igbo_ngram::{Mode, Pipeline, PipelineConfig};

#[derive(Parser, Debug)]
#[command(name = "igbo-ngram", version, about = "Word n-gram representation of Igbo text")]
struct Cli {
    /// Pipeline profile: `paper` reproduces the reference tables, `strict` follows the algorithms literally.
    #[arg(long, global = true, default_value = "paper")]
    mode: Mode,

    /// Stop-word file (comma/newline separated). Defaults to the shipped list.
    #[arg(long, global = true)]
    stopwords: Option<PathBuf>,

    #[arg(long, global = true, default_value = "tsv")]
    format: OutputFormat,

    /// Write here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the normalized text of a document.
    Normalize { file: PathBuf },
    /// Print the tokens of a document, before stop-word removal.
    Tokenize { file: PathBuf },
    /// Print n-gram frequency tables of a document.
    Represent {
        file: PathBuf,
        /// Comma-separated orders, each in 1..=3.
        #[arg(long = "n", value_delimiter = ',', default_value = "1,2,3")]
        orders: Vec<usize>,
    },
    /// Print the document-term matrix of every file in a directory.
    Matrix {
        dir: PathBuf,
        #[arg(long = "n", default_value_t = 1)]
        order: usize,
    },
    /// Print lexicon compounds found among a document's n-grams.
    Features {
        file: PathBuf,
        /// Lexicon file (phrase, gloss, category; TAB-separated). Defaults to the shipped lexicon.
        #[arg(long)]
        lexicon: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Text(#[from] TextIoError),
    #[error(transparent)]
    Pipeline(#[from] PipelineError),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

fn text_io_code(e: &TextIoError) -> u8 {
    match e {
        TextIoError::Decode(_) => 2,
        TextIoError::Io { .. } => 3,
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Text(e) => text_io_code(e),
            CliError::Io { .. } => 3,
            CliError::Pipeline(e) => match e {
                PipelineError::Config(_) | PipelineError::Extract(_) | PipelineError::Matrix(_) => 1,
                PipelineError::StopList(e) | PipelineError::LexiconIo(e) => text_io_code(e),
                PipelineError::Lexicon(LexiconError::Decode(_)) => 2,
                PipelineError::Lexicon(_) => 4,
            },
        }
    }
}

fn pipeline(cli: &Cli, orders: BTreeSet<usize>, lexicon: Option<LexiconSource>) -> Result<Pipeline, CliError> {
    let cfg = PipelineConfig {
        mode: cli.mode,
        stoplist_path: cli.stopwords.clone(),
        lexicon,
        orders,
        output_format: cli.format,
    };
    let p = Pipeline::from_config(&cfg)?;
    for w in p.warnings() {
        eprintln!("warning: {w}");
    }
    Ok(p)
}

fn all_orders() -> BTreeSet<usize> {
    BTreeSet::from([1, 2, 3])
}

/// Regular files directly inside `dir`, sorted by path.
fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let io_err = |source| CliError::Io {
        path: dir.to_path_buf(),
        source,
    };
    let mut files = Vec::new();
    for entry in fs::read_dir(dir).map_err(io_err)? {
        let path = entry.map_err(io_err)?.path();
        if path.is_file() {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

fn render(cli: &Cli) -> Result<String, CliError> {
    let out = match &cli.command {
        Command::Normalize { file } => {
            let doc = pipeline(cli, all_orders(), None)?.normalize(&load_document(file)?);
            match cli.format {
                OutputFormat::Tsv => format!("{}\n", doc.text),
                OutputFormat::Json => pretty(&json!({ "doc_id": doc.id, "text": doc.text })),
            }
        }
        Command::Tokenize { file } => {
            let ts = pipeline(cli, all_orders(), None)?.tokenize(&load_document(file)?);
            match cli.format {
                OutputFormat::Tsv => ts.surfaces().map(|s| format!("{s}\n")).collect(),
                OutputFormat::Json => pretty(&json!({
                    "doc_id": ts.doc_id,
                    "tokens": ts.surfaces().collect::<Vec<_>>(),
                })),
            }
        }
        Command::Represent { file, orders } => {
            let orders: BTreeSet<usize> = orders.iter().copied().collect();
            let bundle = pipeline(cli, orders, None)?.run(&load_document(file)?)?;
            match cli.format {
                OutputFormat::Tsv => export::bundle_to_tsv(&bundle),
                OutputFormat::Json => export::bundle_to_json(&bundle),
            }
        }
        Command::Matrix { dir, order } => {
            if !(1..=3).contains(order) {
                return Err(CliError::Usage(format!("--n must be 1, 2 or 3, got {order}")));
            }
            let p = pipeline(cli, BTreeSet::from([*order]), None)?;
            let docs = load_corpus(&corpus_files(dir)?)?;
            let matrix = build_doc_term_matrix(&p.run_corpus(&docs)?, *order)?;
            match cli.format {
                OutputFormat::Tsv => export::matrix_to_tsv(&matrix),
                OutputFormat::Json => export::matrix_to_json(&matrix),
            }
        }
        Command::Features { file, lexicon } => {
            let source = match lexicon {
                Some(path) => LexiconSource::File(path.clone()),
                None => LexiconSource::Builtin,
            };
            let bundle = pipeline(cli, all_orders(), Some(source))?.run(&load_document(file)?)?;
            let features = bundle.features.unwrap_or_default();
            match cli.format {
                OutputFormat::Tsv => export::features_to_tsv(&features),
                OutputFormat::Json => export::features_to_json(&bundle.doc_id, &features),
            }
        }
    };
    Ok(out)
}

fn pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json value serializes");
    s.push('\n');
    s
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let out = render(cli)?;
    export::write_output(cli.output.as_deref(), &out).map_err(|source| CliError::Io {
        path: cli.output.clone().unwrap_or_else(|| PathBuf::from("<stdout>")),
        source,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
