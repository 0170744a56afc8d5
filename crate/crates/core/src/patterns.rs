//! Clue templates and the matcher that extracts (seed, descriptor) pairs.
//!
//! Each clue is a sequence of fixed-material items (lemma alternatives with an
//! optional PoS constraint) flanked by two noun slots: a hyponym slot holding
//! the seed noun and a hypernym slot holding its descriptor. Matching is on
//! lemma for fixed material and on PoS for the slots; slot heads are resolved
//! with a bounded nominal-run scan rather than a parser, so PP-attachment
//! noise can and does occur.

use std::collections::BTreeSet;
use std::io::{BufRead, Write};
use std::path::Path;

use crate::corpus::{CorpusReader, Sentence};
use crate::{Error, Result};

/// The four built-in clue templates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClueId {
    OrAndOther,
    SuchAs,
    KindTypeOf,
    AlsoKnownAs,
}

impl ClueId {
    pub fn name(&self) -> &'static str {
        match self {
            ClueId::OrAndOther => "or_and_other",
            ClueId::SuchAs => "such_as",
            ClueId::KindTypeOf => "kind_type_of",
            ClueId::AlsoKnownAs => "also_known_as",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "or_and_other" => Ok(ClueId::OrAndOther),
            "such_as" => Ok(ClueId::SuchAs),
            "kind_type_of" => Ok(ClueId::KindTypeOf),
            "also_known_as" => Ok(ClueId::AlsoKnownAs),
            other => Err(Error::Config(format!("unknown clue id '{other}'"))),
        }
    }
}

impl std::fmt::Display for ClueId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Which side of the fixed material holds the seed (hyponym) slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlotSide {
    Before,
    After,
}

/// One fixed-material position: any of the lemma alternatives, optionally
/// restricted to a PoS prefix.
#[derive(Debug, Clone)]
pub struct FixedItem {
    pub alternatives: Vec<String>,
    pub pos_prefix: Option<String>,
}

impl FixedItem {
    pub fn new<S: Into<String>>(alternatives: impl IntoIterator<Item = S>) -> Self {
        FixedItem {
            alternatives: alternatives.into_iter().map(Into::into).collect(),
            pos_prefix: None,
        }
    }

    fn matches(&self, token: &crate::corpus::Token) -> bool {
        if let Some(prefix) = &self.pos_prefix {
            if !token.pos.starts_with(prefix.as_str()) {
                return false;
            }
        }
        self.alternatives.iter().any(|a| a == &token.lemma)
    }
}

#[derive(Debug, Clone)]
pub struct ClueTemplate {
    pub id: ClueId,
    pub hyponym_slot: SlotSide,
    pub fixed_material: Vec<FixedItem>,
}

/// The built-in clue inventory.
///
/// For `such_as` the hypernym precedes the fixed material ("officers such as
/// treasurers"), so the seed slot sits after it; every other clue has the
/// seed first. Alternatives include citation forms (be, know, kind, type)
/// because fixed material is matched against the lemma column and lemmatized
/// corpora render "is"/"are" as "be" and "known" as "know".
pub fn default_templates() -> Vec<ClueTemplate> {
    vec![
        ClueTemplate {
            id: ClueId::OrAndOther,
            hyponym_slot: SlotSide::Before,
            fixed_material: vec![FixedItem::new(["or", "and"]), FixedItem::new(["other"])],
        },
        ClueTemplate {
            id: ClueId::SuchAs,
            hyponym_slot: SlotSide::After,
            fixed_material: vec![FixedItem::new(["such"]), FixedItem::new(["as"])],
        },
        ClueTemplate {
            id: ClueId::KindTypeOf,
            hyponym_slot: SlotSide::Before,
            fixed_material: vec![
                FixedItem::new(["is", "are", "be"]),
                FixedItem::new(["a", "an", "the"]),
                FixedItem::new(["kind", "kinds", "type", "types"]),
                FixedItem::new(["of"]),
            ],
        },
        ClueTemplate {
            id: ClueId::AlsoKnownAs,
            hyponym_slot: SlotSide::Before,
            fixed_material: vec![
                FixedItem::new(["is", "are", "be"]),
                FixedItem::new(["also"]),
                FixedItem::new(["known", "know"]),
                FixedItem::new(["as"]),
            ],
        },
    ]
}

/// Load a template set from a config file.
///
/// One clue per line: `clue_id<TAB>item<TAB>item...` where each item lists
/// lemma alternatives joined by `/`, optionally followed by `:POSPREFIX`.
/// `#` comments and blank lines are allowed. The file replaces the built-in
/// inventory, so leaving a clue out disables it.
pub fn load_templates(path: &Path) -> Result<Vec<ClueTemplate>> {
    let reader = crate::open_file(path)?;
    let mut templates = Vec::new();
    for (line_no, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split('\t');
        let id = ClueId::parse(fields.next().unwrap_or(""))?;
        let mut fixed_material = Vec::new();
        for item in fields {
            let (alts, pos_prefix) = match item.split_once(':') {
                Some((a, p)) => (a, Some(p.to_string())),
                None => (item, None),
            };
            let alternatives: Vec<String> = alts
                .split('/')
                .map(|s| s.trim().to_lowercase())
                .filter(|s| !s.is_empty())
                .collect();
            if alternatives.is_empty() {
                return Err(Error::format(line_no + 1, "fixed item with no alternatives"));
            }
            fixed_material.push(FixedItem {
                alternatives,
                pos_prefix,
            });
        }
        if fixed_material.is_empty() {
            return Err(Error::format(
                line_no + 1,
                format!("clue '{id}' has no fixed material"),
            ));
        }
        let hyponym_slot = match id {
            ClueId::SuchAs => SlotSide::After,
            _ => SlotSide::Before,
        };
        templates.push(ClueTemplate {
            id,
            hyponym_slot,
            fixed_material,
        });
    }
    Ok(templates)
}

/// PoS conventions for NP-head resolution.
#[derive(Debug, Clone)]
pub struct HeadRules {
    pub noun_pos_prefix: String,
    /// Maximum tokens scanned per slot.
    pub max_np_span: usize,
}

impl Default for HeadRules {
    fn default() -> Self {
        HeadRules {
            noun_pos_prefix: "NN".to_string(),
            max_np_span: 4,
        }
    }
}

impl HeadRules {
    fn is_noun(&self, pos: &str) -> bool {
        pos.starts_with(self.noun_pos_prefix.as_str())
    }

    fn in_nominal_run(&self, pos: &str) -> bool {
        pos == "DT" || pos == "PDT" || pos.starts_with("JJ") || pos == "CD" || self.is_noun(pos)
    }

    fn is_preposition(&self, pos: &str) -> bool {
        pos.starts_with("IN") || pos == "TO"
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Leftward,
    Rightward,
}

/// Resolve the head noun of the NP adjacent to `slot_anchor`.
///
/// Rightward the head is the last noun of the contiguous nominal run
/// (determiners, adjectives, cardinals, nouns); the run stops at the first
/// token outside it, so prepositions, verbs, adverbs and punctuation all end
/// the scan ("red wine from France" heads at "wine"). Leftward the scan walks
/// back across the NP and may cross prepositions, taking the head of the
/// governing segment ("the bank of England is ..." heads at "bank"). At most
/// `max_np_span` tokens are scanned either way.
pub fn head_noun(
    sentence: &Sentence,
    slot_anchor: usize,
    direction: Direction,
    rules: &HeadRules,
) -> Option<String> {
    let tokens = &sentence.tokens;
    if slot_anchor >= tokens.len() {
        return None;
    }
    match direction {
        Direction::Rightward => {
            let mut head = None;
            for token in tokens.iter().skip(slot_anchor).take(rules.max_np_span) {
                if !rules.in_nominal_run(&token.pos) {
                    break;
                }
                if rules.is_noun(&token.pos) {
                    head = Some(token.lemma.clone());
                }
            }
            head
        }
        Direction::Leftward => {
            let mut head = None;
            let mut segment_headed = false;
            for back in 0..rules.max_np_span {
                let Some(idx) = slot_anchor.checked_sub(back) else {
                    break;
                };
                let token = &tokens[idx];
                if rules.in_nominal_run(&token.pos) {
                    // first noun of each segment heads it; earlier (leftward)
                    // nouns in the same segment are compound modifiers
                    if rules.is_noun(&token.pos) && !segment_headed {
                        head = Some(token.lemma.clone());
                        segment_headed = true;
                    }
                } else if rules.is_preposition(&token.pos) {
                    segment_headed = false;
                } else {
                    break;
                }
            }
            head
        }
    }
}

/// One extracted (seed, descriptor) occurrence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExtractionRecord {
    pub seed: String,
    pub descriptor: String,
    pub clue: ClueId,
    pub sentence_index: usize,
    pub corpus_id: String,
}

/// Compiled, immutable matcher set. Safe for concurrent use.
#[derive(Debug, Clone)]
pub struct MatcherSet {
    templates: Vec<ClueTemplate>,
    rules: HeadRules,
}

/// Validate templates and bind them to the head-resolution rules.
pub fn compile_clues(templates: Vec<ClueTemplate>, rules: HeadRules) -> Result<MatcherSet> {
    let mut seen = BTreeSet::new();
    for template in &templates {
        if !seen.insert(template.id) {
            return Err(Error::Config(format!(
                "duplicate clue template '{}'",
                template.id
            )));
        }
        if template.fixed_material.is_empty() {
            return Err(Error::Config(format!(
                "clue template '{}' has empty fixed material",
                template.id
            )));
        }
        if template
            .fixed_material
            .iter()
            .any(|item| item.alternatives.is_empty())
        {
            return Err(Error::Config(format!(
                "clue template '{}' has a fixed item with no alternatives",
                template.id
            )));
        }
    }
    Ok(MatcherSet { templates, rules })
}

impl MatcherSet {
    pub fn with_defaults() -> Self {
        compile_clues(default_templates(), HeadRules::default())
            .expect("built-in templates are well-formed")
    }

    pub fn rules(&self) -> &HeadRules {
        &self.rules
    }

    pub fn templates(&self) -> &[ClueTemplate] {
        &self.templates
    }

    pub fn is_empty(&self) -> bool {
        self.templates.is_empty()
    }

    /// Longest template whose fixed material matches at `start`; earlier
    /// templates win length ties.
    fn longest_match_at(&self, sentence: &Sentence, start: usize) -> Option<&ClueTemplate> {
        let mut best: Option<&ClueTemplate> = None;
        for template in &self.templates {
            let len = template.fixed_material.len();
            if start + len > sentence.tokens.len() {
                continue;
            }
            let hit = template
                .fixed_material
                .iter()
                .zip(&sentence.tokens[start..start + len])
                .all(|(item, token)| item.matches(token));
            if hit && best.map_or(true, |b| len > b.fixed_material.len()) {
                best = Some(template);
            }
        }
        best
    }
}

/// Extract all records from one sentence.
///
/// Fixed-material matches are non-overlapping, leftmost-longest. A record is
/// emitted only when both slot heads resolve, the hyponym head is a seed and
/// it differs from the descriptor; a match that fails those gates still
/// claims its span.
pub fn match_sentence(
    sentence: &Sentence,
    matchers: &MatcherSet,
    seeds: &BTreeSet<String>,
    corpus_id: &str,
) -> Vec<ExtractionRecord> {
    let mut records = Vec::new();
    let len = sentence.tokens.len();
    let mut i = 0;
    while i < len {
        let Some(template) = matchers.longest_match_at(sentence, i) else {
            i += 1;
            continue;
        };
        let fixed_len = template.fixed_material.len();
        let left = i
            .checked_sub(1)
            .and_then(|a| head_noun(sentence, a, Direction::Leftward, &matchers.rules));
        let right = head_noun(sentence, i + fixed_len, Direction::Rightward, &matchers.rules);
        let (hyponym, hypernym) = match template.hyponym_slot {
            SlotSide::Before => (left, right),
            SlotSide::After => (right, left),
        };
        if let (Some(seed), Some(descriptor)) = (hyponym, hypernym) {
            if seed != descriptor && seeds.contains(&seed) {
                records.push(ExtractionRecord {
                    seed,
                    descriptor,
                    clue: template.id,
                    sentence_index: sentence.index,
                    corpus_id: corpus_id.to_string(),
                });
            }
        }
        i += fixed_len;
    }
    records
}

/// Run extraction over a whole corpus stream. Records come out in sentence
/// order, so the result is deterministic for a fixed corpus.
pub fn extract_corpus<R: BufRead>(
    corpus: CorpusReader<R>,
    matchers: &MatcherSet,
    seeds: &BTreeSet<String>,
) -> Result<Vec<ExtractionRecord>> {
    let corpus_id = corpus.corpus_id().to_string();
    let mut records = Vec::new();
    for sentence in corpus {
        let sentence = sentence?;
        records.extend(match_sentence(&sentence, matchers, seeds, &corpus_id));
    }
    Ok(records)
}

/// Write records as TSV: `seed descriptor clue_id corpus_id sentence_index`.
pub fn write_records<W: Write>(mut out: W, records: &[ExtractionRecord]) -> Result<()> {
    for r in records {
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}",
            r.seed, r.descriptor, r.clue, r.corpus_id, r.sentence_index
        )?;
    }
    Ok(())
}

pub fn read_records<R: BufRead>(reader: R) -> Result<Vec<ExtractionRecord>> {
    let mut records = Vec::new();
    for (line_no, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim_end();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 5 {
            return Err(Error::format(
                line_no + 1,
                format!("expected 5 columns in record line, found {}", fields.len()),
            ));
        }
        let sentence_index: usize = fields[4].parse().map_err(|_| {
            Error::format(line_no + 1, format!("bad sentence index '{}'", fields[4]))
        })?;
        records.push(ExtractionRecord {
            seed: fields[0].to_string(),
            descriptor: fields[1].to_string(),
            clue: ClueId::parse(fields[2])
                .map_err(|e| Error::format(line_no + 1, e.to_string()))?,
            sentence_index,
            corpus_id: fields[3].to_string(),
        });
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{Sentence, Token};

    /// Build a sentence from `surface/POS/lemma` tokens.
    fn sent(spec: &str) -> Sentence {
        let tokens = spec
            .split_whitespace()
            .map(|t| {
                let parts: Vec<&str> = t.split('/').collect();
                assert_eq!(parts.len(), 3, "bad token spec {t}");
                Token {
                    surface: parts[0].to_string(),
                    pos: parts[1].to_string(),
                    lemma: parts[2].to_lowercase(),
                }
            })
            .collect();
        Sentence { tokens, index: 0 }
    }

    fn seeds(items: &[&str]) -> BTreeSet<String> {
        items.iter().map(|s| s.to_string()).collect()
    }

    fn pairs(records: &[ExtractionRecord]) -> Vec<(String, String, ClueId)> {
        records
            .iter()
            .map(|r| (r.seed.clone(), r.descriptor.clone(), r.clue))
            .collect()
    }

    #[test]
    fn rightward_head_stops_at_preposition() {
        let s = sent("such/JJ/such as/IN/as red/JJ/red wine/NN/wine from/IN/from France/NNP/france");
        let head = head_noun(&s, 2, Direction::Rightward, &HeadRules::default());
        assert_eq!(head.as_deref(), Some("wine"));
    }

    #[test]
    fn rightward_head_takes_last_noun_of_run() {
        let s = sent("staff/NN/staff meetings/NNS/meeting drain/VBP/drain");
        let head = head_noun(&s, 0, Direction::Rightward, &HeadRules::default());
        assert_eq!(head.as_deref(), Some("meeting"));
    }

    #[test]
    fn rightward_adverb_blocks_run() {
        let s = sent("very/RB/very big/JJ/big systems/NNS/system");
        let head = head_noun(&s, 0, Direction::Rightward, &HeadRules::default());
        assert_eq!(head, None);
    }

    #[test]
    fn leftward_head_crosses_pp_to_governing_noun() {
        let s = sent(
            "the/DT/the bank/NN/bank of/IN/of England/NNP/england is/VBZ/be a/DT/a kind/NN/kind",
        );
        let head = head_noun(&s, 3, Direction::Leftward, &HeadRules::default());
        assert_eq!(head.as_deref(), Some("bank"));
    }

    #[test]
    fn leftward_head_simple_np() {
        let s = sent("a/DT/a zebra/NN/zebra is/VBZ/be");
        let head = head_noun(&s, 1, Direction::Leftward, &HeadRules::default());
        assert_eq!(head.as_deref(), Some("zebra"));
    }

    #[test]
    fn leftward_compound_keeps_segment_head() {
        // "the city market near London is" heads at "market", not "city"
        let s = sent(
            "the/DT/the city/NN/city market/NN/market near/IN/near London/NNP/london is/VBZ/be",
        );
        let head = head_noun(&s, 4, Direction::Leftward, &HeadRules::default());
        assert_eq!(head.as_deref(), Some("market"));
    }

    #[test]
    fn leftward_blocked_by_punctuation() {
        let s = sent("doctors/NNS/doctor ,/,/, and/CC/and");
        let head = head_noun(&s, 1, Direction::Leftward, &HeadRules::default());
        assert_eq!(head, None);
    }

    #[test]
    fn span_limit_caps_the_scan() {
        let s = sent("the/DT/the very/RB/very old/JJ/old red/JJ/red cheap/JJ/cheap wine/NN/wine");
        // from "old" rightward, wine sits at offset 4 with span 4 -> unreachable
        let head = head_noun(&s, 2, Direction::Rightward, &HeadRules::default());
        assert_eq!(head, None);
        let mut rules = HeadRules::default();
        rules.max_np_span = 5;
        let head = head_noun(&s, 2, Direction::Rightward, &rules);
        assert_eq!(head.as_deref(), Some("wine"));
    }

    #[test]
    fn or_and_other_extracts_descriptor() {
        let m = MatcherSet::with_defaults();
        let s = sent(
            "Treasurers/NNS/treasurer and/CC/and other/JJ/other officers/NNS/officer \
             attended/VBD/attend",
        );
        let records = match_sentence(&s, &m, &seeds(&["treasurer"]), "t");
        assert_eq!(
            pairs(&records),
            vec![("treasurer".into(), "officer".into(), ClueId::OrAndOther)]
        );
    }

    #[test]
    fn kind_type_of_extracts_descriptor() {
        let m = MatcherSet::with_defaults();
        let s = sent(
            "A/DT/a zebra/NN/zebra is/VBZ/be a/DT/a type/NN/type of/IN/of mammal/NN/mammal",
        );
        let records = match_sentence(&s, &m, &seeds(&["zebra"]), "t");
        assert_eq!(
            pairs(&records),
            vec![("zebra".into(), "mammal".into(), ClueId::KindTypeOf)]
        );
    }

    #[test]
    fn such_as_seed_follows_fixed_material() {
        let m = MatcherSet::with_defaults();
        let s = sent("officers/NNS/officer such/JJ/such as/IN/as treasurers/NNS/treasurer");
        let records = match_sentence(&s, &m, &seeds(&["treasurer"]), "t");
        assert_eq!(
            pairs(&records),
            vec![("treasurer".into(), "officer".into(), ClueId::SuchAs)]
        );
        // the hypernym side is never the seed slot
        assert!(match_sentence(&s, &m, &seeds(&["officer"]), "t").is_empty());
    }

    #[test]
    fn also_known_as_extracts_descriptor() {
        let m = MatcherSet::with_defaults();
        let s = sent(
            "Doctors/NNS/doctor are/VBP/be also/RB/also known/VBN/know as/IN/as \
             physicians/NNS/physician",
        );
        let records = match_sentence(&s, &m, &seeds(&["doctor"]), "t");
        assert_eq!(
            pairs(&records),
            vec![("doctor".into(), "physician".into(), ClueId::AlsoKnownAs)]
        );
    }

    #[test]
    fn non_seed_hyponym_is_gated() {
        let m = MatcherSet::with_defaults();
        let s = sent("resorts/NNS/resort and/CC/and other/JJ/other destinations/NNS/destination");
        assert!(match_sentence(&s, &m, &seeds(&["kitchen"]), "t").is_empty());
    }

    #[test]
    fn seed_equal_to_descriptor_is_dropped() {
        let m = MatcherSet::with_defaults();
        let s = sent("zebras/NNS/zebra and/CC/and other/JJ/other zebras/NNS/zebra");
        assert!(match_sentence(&s, &m, &seeds(&["zebra"]), "t").is_empty());
    }

    #[test]
    fn multiple_matches_in_one_sentence_left_to_right() {
        let m = MatcherSet::with_defaults();
        let s = sent(
            "A/DT/a zebra/NN/zebra is/VBZ/be a/DT/a type/NN/type of/IN/of mammal/NN/mammal \
             ;/:/; zebras/NNS/zebra are/VBP/be a/DT/a kind/NN/kind of/IN/of animal/NN/animal",
        );
        let records = match_sentence(&s, &m, &seeds(&["zebra"]), "t");
        assert_eq!(
            pairs(&records),
            vec![
                ("zebra".into(), "mammal".into(), ClueId::KindTypeOf),
                ("zebra".into(), "animal".into(), ClueId::KindTypeOf),
            ]
        );
    }

    #[test]
    fn empty_template_set_matches_nothing() {
        let m = compile_clues(Vec::new(), HeadRules::default()).unwrap();
        assert!(m.is_empty());
        let s = sent("officers/NNS/officer such/JJ/such as/IN/as treasurers/NNS/treasurer");
        assert!(match_sentence(&s, &m, &seeds(&["treasurer"]), "t").is_empty());
    }

    #[test]
    fn duplicate_template_ids_rejected() {
        let mut templates = default_templates();
        templates.push(templates[0].clone());
        let err = compile_clues(templates, HeadRules::default()).unwrap_err();
        assert!(matches!(err, Error::Config(_)));
    }

    #[test]
    fn extract_corpus_keeps_sentence_indices() {
        use std::io::Cursor;
        let text = "Treasurers\tNNS\ttreasurer\nand\tCC\tand\nother\tJJ\tother\n\
                    officers\tNNS\tofficer\n\n\
                    A\tDT\ta\nzebra\tNN\tzebra\nis\tVBZ\tbe\na\tDT\ta\nkind\tNN\tkind\n\
                    of\tIN\tof\nmammal\tNN\tmammal\n\n";
        let reader = CorpusReader::new(
            Cursor::new(text.as_bytes()),
            crate::corpus::CorpusFormat::default(),
            "two",
        );
        let records = extract_corpus(
            reader,
            &MatcherSet::with_defaults(),
            &seeds(&["treasurer", "zebra"]),
        )
        .unwrap();
        assert_eq!(records.len(), 2);
        assert_eq!(records[0].sentence_index, 0);
        assert_eq!(records[1].sentence_index, 1);
        assert_eq!(records[1].corpus_id, "two");
    }

    #[test]
    fn records_tsv_round_trip() {
        let records = vec![
            ExtractionRecord {
                seed: "zebra".into(),
                descriptor: "mammal".into(),
                clue: ClueId::KindTypeOf,
                sentence_index: 7,
                corpus_id: "c1".into(),
            },
            ExtractionRecord {
                seed: "treasurer".into(),
                descriptor: "officer".into(),
                clue: ClueId::SuchAs,
                sentence_index: 12,
                corpus_id: "c2".into(),
            },
        ];
        let mut buf = Vec::new();
        write_records(&mut buf, &records).unwrap();
        let reparsed = read_records(std::io::Cursor::new(buf)).unwrap();
        assert_eq!(reparsed, records);
    }

    #[test]
    fn template_config_overrides_inventory() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("clues.tsv");
        std::fs::write(&path, "# custom\nor_and_other\tor/and\tother\n").unwrap();
        let templates = load_templates(&path).unwrap();
        assert_eq!(templates.len(), 1);
        assert_eq!(templates[0].id, ClueId::OrAndOther);
        assert_eq!(templates[0].fixed_material.len(), 2);
        assert_eq!(templates[0].fixed_material[0].alternatives, vec!["or", "and"]);

        std::fs::write(&path, "kind_type_of\tis/are\ta\tkind:NN\tof\n").unwrap();
        let templates = load_templates(&path).unwrap();
        assert_eq!(templates[0].fixed_material[2].pos_prefix.as_deref(), Some("NN"));

        std::fs::write(&path, "no_such_clue\tfoo\n").unwrap();
        assert!(load_templates(&path).is_err());
    }
}
