//! Streaming reader for vertical-format (one token per line) PoS-tagged corpora.
//!
//! Input files are UTF-8 with tab-separated columns in a configurable order.
//! Sentences end at blank lines and/or `</s>` marker lines; any other line of
//! the shape `<...>` is treated as structural markup and skipped. Memory use
//! is bounded by the longest sentence, never by file size.

use std::io::BufRead;
use std::path::Path;

use crate::{Error, Result};

/// A single PoS-tagged token. The lemma is lowercased at parse time and is
/// authoritative for matching; the surface form is kept for reports only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    pub pos: String,
    pub lemma: String,
}

/// One sentence with its 0-based ordinal position in the stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sentence {
    pub tokens: Vec<Token>,
    pub index: usize,
}

/// Column roles a vertical file may carry, in file order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Column {
    Surface,
    Pos,
    Lemma,
}

/// Sentence-boundary convention of the input file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Boundary {
    /// Blank lines and `</s>` markers both end a sentence.
    #[default]
    Auto,
    /// Only blank lines end a sentence; `</s>` is skipped as markup.
    Blank,
    /// Only `</s>` lines end a sentence; blank lines are ignored.
    Marker,
}

impl Boundary {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Boundary::Auto),
            "blank" => Ok(Boundary::Blank),
            "marker" => Ok(Boundary::Marker),
            other => Err(Error::Config(format!(
                "unknown boundary convention '{other}' (expected auto, blank or marker)"
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Boundary::Auto => "auto",
            Boundary::Blank => "blank",
            Boundary::Marker => "marker",
        }
    }
}

/// Parsing configuration for a vertical corpus file.
#[derive(Debug, Clone)]
pub struct CorpusFormat {
    /// Order of the columns in the file. Extra trailing columns are ignored.
    pub columns: Vec<Column>,
    /// PoS prefix that identifies nouns (`NN` covers NN/NNS/NNP/NNPS).
    pub noun_pos_prefix: String,
    pub boundary: Boundary,
}

impl Default for CorpusFormat {
    fn default() -> Self {
        CorpusFormat {
            columns: vec![Column::Surface, Column::Pos, Column::Lemma],
            noun_pos_prefix: "NN".to_string(),
            boundary: Boundary::Auto,
        }
    }
}

impl CorpusFormat {
    /// Parse a column spec like `surface,pos,lemma`. All three roles must
    /// appear exactly once.
    pub fn parse_columns(spec: &str) -> Result<Vec<Column>> {
        let mut columns = Vec::new();
        for name in spec.split(',') {
            let col = match name.trim() {
                "surface" => Column::Surface,
                "pos" => Column::Pos,
                "lemma" => Column::Lemma,
                other => {
                    return Err(Error::Config(format!(
                        "unknown column '{other}' (expected surface, pos or lemma)"
                    )))
                }
            };
            if columns.contains(&col) {
                return Err(Error::Config(format!("duplicate column '{}'", name.trim())));
            }
            columns.push(col);
        }
        if columns.len() != 3 {
            return Err(Error::Config(
                "column spec must name surface, pos and lemma exactly once".to_string(),
            ));
        }
        Ok(columns)
    }

    pub fn columns_spec(&self) -> String {
        self.columns
            .iter()
            .map(|c| match c {
                Column::Surface => "surface",
                Column::Pos => "pos",
                Column::Lemma => "lemma",
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// True iff the token's PoS tag begins with the configured noun prefix.
pub fn is_noun(token: &Token, noun_pos_prefix: &str) -> bool {
    token.pos.starts_with(noun_pos_prefix)
}

/// Streaming sentence iterator over one vertical corpus file or reader.
///
/// A reader is single-consumer; independent readers over disjoint files may
/// run concurrently.
pub struct CorpusReader<R: BufRead> {
    lines: std::iter::Enumerate<std::io::Lines<R>>,
    format: CorpusFormat,
    corpus_id: String,
    next_index: usize,
    done: bool,
}

impl<R: BufRead> CorpusReader<R> {
    pub fn new(reader: R, format: CorpusFormat, corpus_id: impl Into<String>) -> Self {
        CorpusReader {
            lines: reader.lines().enumerate(),
            format,
            corpus_id: corpus_id.into(),
            next_index: 0,
            done: false,
        }
    }

    pub fn corpus_id(&self) -> &str {
        &self.corpus_id
    }

    pub fn format(&self) -> &CorpusFormat {
        &self.format
    }

    fn parse_token(&self, line_no: usize, line: &str) -> Result<Token> {
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() < self.format.columns.len() {
            return Err(Error::format(
                line_no,
                format!(
                    "expected {} tab-separated columns, found {}",
                    self.format.columns.len(),
                    fields.len()
                ),
            ));
        }
        let mut surface = "";
        let mut pos = "";
        let mut lemma = "";
        for (field, column) in fields.iter().zip(&self.format.columns) {
            match column {
                Column::Surface => surface = field,
                Column::Pos => pos = field,
                Column::Lemma => lemma = field,
            }
        }
        if surface.is_empty() || pos.is_empty() || lemma.is_empty() {
            return Err(Error::format(line_no, "empty surface, pos or lemma field"));
        }
        Ok(Token {
            surface: surface.to_string(),
            pos: pos.to_string(),
            lemma: lemma.to_lowercase(),
        })
    }
}

impl<R: BufRead> Iterator for CorpusReader<R> {
    type Item = Result<Sentence>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let mut tokens = Vec::new();
        loop {
            let (line_no, line) = match self.lines.next() {
                Some((n, Ok(line))) => (n + 1, line),
                Some((_, Err(e))) => {
                    self.done = true;
                    return Some(Err(Error::Io(e)));
                }
                None => {
                    self.done = true;
                    if tokens.is_empty() {
                        return None;
                    }
                    let index = self.next_index;
                    self.next_index += 1;
                    return Some(Ok(Sentence { tokens, index }));
                }
            };
            let trimmed = line.trim_end_matches(['\r', '\n']);
            let is_blank = trimmed.trim().is_empty();
            let is_markup = trimmed.starts_with('<') && trimmed.ends_with('>');
            let is_end_marker = is_markup && trimmed.trim() == "</s>";
            let ends_sentence = match self.format.boundary {
                Boundary::Auto => is_blank || is_end_marker,
                Boundary::Blank => is_blank,
                Boundary::Marker => is_end_marker,
            };
            if ends_sentence {
                if tokens.is_empty() {
                    continue; // nothing buffered, swallow the boundary
                }
                let index = self.next_index;
                self.next_index += 1;
                return Some(Ok(Sentence { tokens, index }));
            }
            if is_blank || is_markup {
                continue;
            }
            match self.parse_token(line_no, trimmed) {
                Ok(token) => tokens.push(token),
                Err(e) => {
                    self.done = true;
                    return Some(Err(e));
                }
            }
        }
    }
}

/// Open a vertical corpus file. The corpus id is the file stem.
pub fn open_corpus(
    path: &Path,
    format: &CorpusFormat,
) -> Result<CorpusReader<std::io::BufReader<std::fs::File>>> {
    let reader = crate::open_file(path)?;
    let corpus_id = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    Ok(CorpusReader::new(reader, format.clone(), corpus_id))
}

/// Serialize a sentence back to vertical format (tokens + trailing blank
/// line). Re-parsing the output yields an identical token list.
pub fn to_vertical(sentence: &Sentence, format: &CorpusFormat) -> String {
    let mut out = String::new();
    for token in &sentence.tokens {
        let fields: Vec<&str> = format
            .columns
            .iter()
            .map(|c| match c {
                Column::Surface => token.surface.as_str(),
                Column::Pos => token.pos.as_str(),
                Column::Lemma => token.lemma.as_str(),
            })
            .collect();
        out.push_str(&fields.join("\t"));
        out.push('\n');
    }
    out.push('\n');
    out
}
