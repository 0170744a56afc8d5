//! The seed x descriptor co-occurrence matrix: build, filter, bootstrap,
//! persist.
//!
//! Counts are raw occurrence counts; zero entries are never stored. Rows that
//! lose all their columns to filtering are kept as explicit zero-feature rows
//! so they can be reported (and excluded only at clustering time). All
//! operations are pure functions over immutable matrices.

use std::collections::{BTreeMap, BTreeSet};
use std::io::{BufRead, Write};
use std::path::Path;

use crate::cluster::Distribution;
use crate::corpus::CorpusReader;
use crate::patterns::{extract_corpus, ClueId, ExtractionRecord, MatcherSet};
use crate::{Error, Result};

/// Where one (noun, descriptor) count came from. Level 1 entries are direct
/// extractions; level 2 entries were inherited through a descriptor chain
/// during bootstrapping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProvenanceEntry {
    pub clue: ClueId,
    pub corpus_id: String,
    pub sentence_index: usize,
    pub level: u8,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct FeatureMatrix {
    rows: BTreeMap<String, BTreeMap<String, u64>>,
    provenance: BTreeMap<(String, String), Vec<ProvenanceEntry>>,
}

impl FeatureMatrix {
    pub fn new() -> Self {
        Self::default()
    }

    /// Build a matrix from explicit counts, without provenance. Mostly for
    /// tests and synthetic data.
    pub fn from_counts<N, D>(counts: impl IntoIterator<Item = (N, D, u64)>) -> Self
    where
        N: Into<String>,
        D: Into<String>,
    {
        let mut matrix = FeatureMatrix::new();
        for (noun, descriptor, count) in counts {
            if count > 0 {
                *matrix
                    .rows
                    .entry(noun.into())
                    .or_default()
                    .entry(descriptor.into())
                    .or_insert(0) += count;
            }
        }
        matrix
    }

    pub fn rows(&self) -> &BTreeMap<String, BTreeMap<String, u64>> {
        &self.rows
    }

    pub fn row(&self, noun: &str) -> Option<&BTreeMap<String, u64>> {
        self.rows.get(noun)
    }

    pub fn count(&self, noun: &str, descriptor: &str) -> u64 {
        self.rows
            .get(noun)
            .and_then(|r| r.get(descriptor))
            .copied()
            .unwrap_or(0)
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// All descriptor columns with at least one nonzero entry.
    pub fn descriptors(&self) -> BTreeSet<String> {
        self.rows
            .values()
            .flat_map(|r| r.keys().cloned())
            .collect()
    }

    pub fn total_mass(&self) -> u64 {
        self.rows.values().flat_map(|r| r.values()).sum()
    }

    /// Rows that currently have no features at all.
    pub fn zero_feature_nouns(&self) -> Vec<String> {
        self.rows
            .iter()
            .filter(|(_, r)| r.is_empty())
            .map(|(n, _)| n.clone())
            .collect()
    }

    pub fn ensure_row(&mut self, noun: &str) {
        self.rows.entry(noun.to_string()).or_default();
    }

    pub fn provenance(&self) -> &BTreeMap<(String, String), Vec<ProvenanceEntry>> {
        &self.provenance
    }

    fn add_record(&mut self, noun: &str, descriptor: &str, record: &ExtractionRecord, level: u8) {
        *self
            .rows
            .entry(noun.to_string())
            .or_default()
            .entry(descriptor.to_string())
            .or_insert(0) += 1;
        self.provenance
            .entry((noun.to_string(), descriptor.to_string()))
            .or_default()
            .push(ProvenanceEntry {
                clue: record.clue,
                corpus_id: record.corpus_id.clone(),
                sentence_index: record.sentence_index,
                level,
            });
    }

    /// Restrict to the given rows, keeping their features unchanged.
    pub fn restrict(&self, nouns: &BTreeSet<String>) -> FeatureMatrix {
        FeatureMatrix {
            rows: self
                .rows
                .iter()
                .filter(|(n, _)| nouns.contains(*n))
                .map(|(n, r)| (n.clone(), r.clone()))
                .collect(),
            provenance: self
                .provenance
                .iter()
                .filter(|((n, _), _)| nouns.contains(n))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }
}

/// Count every (seed, descriptor) record into a matrix, with provenance.
pub fn build_matrix(records: &[ExtractionRecord]) -> FeatureMatrix {
    let mut matrix = FeatureMatrix::new();
    for record in records {
        matrix.add_record(&record.seed, &record.descriptor, record, 1);
    }
    matrix
}

/// Drop every descriptor column that appears in fewer than `min_sharers`
/// distinct rows. Rows emptied by the filter are kept as zero-feature rows;
/// class labels are never consulted.
pub fn filter_shared(matrix: &FeatureMatrix, min_sharers: u32) -> FeatureMatrix {
    let mut sharers: BTreeMap<&str, u32> = BTreeMap::new();
    for row in matrix.rows.values() {
        for descriptor in row.keys() {
            *sharers.entry(descriptor).or_insert(0) += 1;
        }
    }
    let keep: BTreeSet<&str> = sharers
        .iter()
        .filter(|(_, &n)| n >= min_sharers)
        .map(|(&d, _)| d)
        .collect();
    FeatureMatrix {
        rows: matrix
            .rows
            .iter()
            .map(|(noun, row)| {
                let filtered: BTreeMap<String, u64> = row
                    .iter()
                    .filter(|(d, _)| keep.contains(d.as_str()))
                    .map(|(d, &c)| (d.clone(), c))
                    .collect();
                (noun.clone(), filtered)
            })
            .collect(),
        provenance: matrix
            .provenance
            .iter()
            .filter(|((_, d), _)| keep.contains(d.as_str()))
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect(),
    }
}

/// Which descriptor set seeds the second extraction level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BootstrapSeedSource {
    /// Columns of the filtered matrix (the default).
    #[default]
    Postfilter,
    /// Columns of the unfiltered matrix.
    Prefilter,
}

impl BootstrapSeedSource {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "postfilter" => Ok(BootstrapSeedSource::Postfilter),
            "prefilter" => Ok(BootstrapSeedSource::Prefilter),
            other => Err(Error::Config(format!(
                "unknown bootstrap seed source '{other}' (expected prefilter or postfilter)"
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            BootstrapSeedSource::Postfilter => "postfilter",
            BootstrapSeedSource::Prefilter => "prefilter",
        }
    }
}

/// One bootstrapping iteration over an already-filtered matrix.
///
/// The matrix's descriptor columns (or the supplied `seed_pool`) become the
/// seed set for a second extraction pass over the corpus. Every level-2
/// record (d, d2) is then inherited by each original noun that carries d:
/// rows[n][d2] gains the level-2 occurrence count. Inherited self-features
/// (d2 equal to the noun itself) are discarded, and the shared-feature filter
/// runs again over the unified matrix.
pub fn bootstrap_once<R: BufRead>(
    matrix: &FeatureMatrix,
    corpora: Vec<CorpusReader<R>>,
    matchers: &MatcherSet,
    seed_pool: Option<&BTreeSet<String>>,
    min_sharers: u32,
) -> Result<FeatureMatrix> {
    let own_pool;
    let seeds = match seed_pool {
        Some(pool) => pool,
        None => {
            own_pool = matrix.descriptors();
            &own_pool
        }
    };
    let mut level2: BTreeMap<&str, Vec<ExtractionRecord>> = BTreeMap::new();
    if !seeds.is_empty() {
        for corpus in corpora {
            for record in extract_corpus(corpus, matchers, seeds)? {
                level2
                    .entry(seeds.get(record.seed.as_str()).unwrap())
                    .or_default()
                    .push(record);
            }
        }
    }

    let mut unified = matrix.clone();
    for (noun, row) in &matrix.rows {
        for descriptor in row.keys() {
            let Some(records) = level2.get(descriptor.as_str()) else {
                continue;
            };
            for record in records {
                if record.descriptor == *noun {
                    continue; // no self-features
                }
                unified.add_record(noun, &record.descriptor, record, 2);
            }
        }
    }
    Ok(filter_shared(&unified, min_sharers))
}

/// Normalize a matrix row into p(y|x).
pub fn row_distribution(matrix: &FeatureMatrix, noun: &str) -> Result<Distribution> {
    let row = matrix
        .row(noun)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown noun '{noun}'")))?;
    if row.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "noun '{noun}' has no features; its distribution is undefined"
        )));
    }
    let total: u64 = row.values().sum();
    let (support, probs) = row
        .iter()
        .map(|(d, &c)| (d.clone(), c as f64 / total as f64))
        .unzip();
    Distribution::new(support, probs)
}

/// Write the matrix as TSV (`noun<TAB>descriptor<TAB>count`, sorted by noun
/// then descriptor). Zero-feature rows are recorded in a header comment so
/// that loading restores them.
pub fn save_matrix<W: Write>(mut out: W, matrix: &FeatureMatrix) -> Result<()> {
    let zero = matrix.zero_feature_nouns();
    if !zero.is_empty() {
        writeln!(out, "# zero-feature-rows: {}", zero.join(","))?;
    }
    for (noun, row) in matrix.rows() {
        for (descriptor, count) in row {
            writeln!(out, "{noun}\t{descriptor}\t{count}")?;
        }
    }
    Ok(())
}

pub fn save_matrix_file(path: &Path, matrix: &FeatureMatrix) -> Result<()> {
    let file = std::fs::File::create(path).map_err(|e| Error::File {
        path: path.to_path_buf(),
        source: e,
    })?;
    save_matrix(std::io::BufWriter::new(file), matrix)
}

/// Load a matrix saved by [`save_matrix`]. Counts must be positive and each
/// (noun, descriptor) pair may appear once. Provenance is not restored.
pub fn load_matrix<R: BufRead>(reader: R) -> Result<FeatureMatrix> {
    let mut matrix = FeatureMatrix::new();
    for (line_no, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim_end();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("# zero-feature-rows:") {
            for noun in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                matrix.ensure_row(noun);
            }
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 3 {
            return Err(Error::format(
                line_no + 1,
                format!("expected 3 columns, found {}", fields.len()),
            ));
        }
        let count: u64 = fields[2]
            .parse()
            .map_err(|_| Error::format(line_no + 1, format!("bad count '{}'", fields[2])))?;
        if count == 0 {
            return Err(Error::format(line_no + 1, "counts must be >= 1"));
        }
        let row = matrix.rows.entry(fields[0].to_string()).or_default();
        if row.insert(fields[1].to_string(), count).is_some() {
            return Err(Error::format(
                line_no + 1,
                format!("duplicate entry for ({}, {})", fields[0], fields[1]),
            ));
        }
    }
    Ok(matrix)
}

pub fn load_matrix_file(path: &Path) -> Result<FeatureMatrix> {
    load_matrix(crate::open_file(path)?)
}

/// Write provenance TSV:
/// `noun<TAB>descriptor<TAB>clue_id<TAB>corpus_id<TAB>sentence_index<TAB>level`.
pub fn save_provenance<W: Write>(mut out: W, matrix: &FeatureMatrix) -> Result<()> {
    for ((noun, descriptor), entries) in matrix.provenance() {
        for e in entries {
            writeln!(
                out,
                "{noun}\t{descriptor}\t{}\t{}\t{}\t{}",
                e.clue, e.corpus_id, e.sentence_index, e.level
            )?;
        }
    }
    Ok(())
}

/// Seed nouns mapped to their gold class labels.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SeedLexicon {
    entries: BTreeMap<String, String>,
}

impl SeedLexicon {
    pub fn from_entries<N, C>(entries: impl IntoIterator<Item = (N, C)>) -> Self
    where
        N: Into<String>,
        C: Into<String>,
    {
        SeedLexicon {
            entries: entries
                .into_iter()
                .map(|(n, c)| (n.into().to_lowercase(), c.into()))
                .collect(),
        }
    }

    /// Parse `noun<TAB>class` lines; `#` comments and blank lines allowed.
    pub fn load<R: BufRead>(reader: R) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (line_no, line) in reader.lines().enumerate() {
            let line = line?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (noun, class) = line.split_once('\t').ok_or_else(|| {
                Error::format(line_no + 1, "expected `noun<TAB>class`".to_string())
            })?;
            entries.insert(noun.trim().to_lowercase(), class.trim().to_string());
        }
        Ok(SeedLexicon { entries })
    }

    pub fn load_file(path: &Path) -> Result<Self> {
        Self::load(crate::open_file(path)?)
    }

    pub fn class_of(&self, noun: &str) -> Option<&str> {
        self.entries.get(noun).map(|s| s.as_str())
    }

    pub fn seed_set(&self) -> BTreeSet<String> {
        self.entries.keys().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Distinct class labels in sorted order.
    pub fn classes(&self) -> Vec<String> {
        self.entries
            .values()
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    pub fn entries(&self) -> &BTreeMap<String, String> {
        &self.entries
    }
}
