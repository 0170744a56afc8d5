//! Corpus-to-clusters pipeline for inducing lexical semantic classes of nouns.
//!
//! The pipeline has two halves. The first extracts hypernym-style descriptors
//! for a set of seed nouns from PoS-tagged corpora using lexico-syntactic clue
//! patterns ("x and other y", "y such as x", ...), filters descriptors shared
//! by too few nouns, and optionally bootstraps one more level of descriptors
//! by treating the extracted descriptors themselves as seeds and propagating
//! their hypernyms back to the original nouns. The second half turns each
//! noun's descriptor counts into a conditional distribution and clusters the
//! nouns with a sequential information bottleneck algorithm driven by
//! Jensen-Shannon merge costs.
//!
//! Modules follow the pipeline stages:
//!
//! - [`corpus`]: streaming reader for vertical (one token per line) corpora
//! - [`patterns`]: clue template compilation and descriptor extraction
//! - [`features`]: co-occurrence matrix build / filter / bootstrap / persist
//! - [`cluster`]: JS divergence, sIB clustering and sub-clustering
//! - [`report`]: evaluation tables against a gold lexicon
//! - [`synth`]: planted-class synthetic corpus generator for end-to-end tests

pub mod cluster;
pub mod corpus;
pub mod features;
pub mod patterns;
pub mod report;
pub mod synth;

use std::path::PathBuf;

/// Errors shared across the pipeline stages.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("format error at line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("configuration error: {0}")]
    Config(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("evaluation error: {0}")]
    Evaluation(String),
}

impl Error {
    pub(crate) fn format(line: usize, message: impl Into<String>) -> Self {
        Error::Format {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Open a file for buffered reading, attaching the path to any error.
pub(crate) fn open_file(path: &std::path::Path) -> Result<std::io::BufReader<std::fs::File>> {
    std::fs::File::open(path)
        .map(std::io::BufReader::new)
        .map_err(|e| Error::File {
            path: path.to_path_buf(),
            source: e,
        })
}
