//! Noun extraction from POS-tagged text and corpus composition reports.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::classify::{classify, ClassificationResult, ClassifyError};
use crate::label::GenderLabel;
use crate::lexicon::SeedLexicon;
use crate::params::ClassifierParams;
use crate::source::{DefinitionSource, TransportError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum NounTag {
    #[serde(rename = "NN")]
    Singular,
    #[serde(rename = "NNS")]
    Plural,
}

impl NounTag {
    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "NN" => Some(NounTag::Singular),
            "NNS" => Some(NounTag::Plural),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            NounTag::Singular => "NN",
            NounTag::Plural => "NNS",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NounRecord {
    pub surface: String,
    pub pos: NounTag,
    pub frequency: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: expected token<TAB>POS, got {content:?}")]
pub struct MalformedLine {
    pub line: usize,
    pub content: String,
}

/// Letters, hyphens and apostrophes only; anything else is a cleaning or
/// tokenization artifact.
pub fn is_clean_noun(surface: &str) -> bool {
    !surface.is_empty()
        && surface.chars().any(char::is_alphabetic)
        && surface
            .chars()
            .all(|c| c.is_alphabetic() || c == '-' || c == '\'')
}

/// Streaming aggregation of `token<TAB>POS` lines into noun records.
#[derive(Debug, Default)]
pub struct NounCollector {
    counts: BTreeMap<(String, NounTag), usize>,
    retained: usize,
}

impl NounCollector {
    pub fn new() -> Self {
        Self::default()
    }

    /// Feed one input line; `line` is its 1-based number for error reports.
    /// Blank lines are sentence breaks.
    pub fn push_line(&mut self, line: usize, text: &str) -> Result<(), MalformedLine> {
        let text = text.trim_end_matches(['\r', '\n']);
        if text.trim().is_empty() {
            return Ok(());
        }
        let mut fields = text.split('\t');
        let (token, tag) = match (fields.next(), fields.next(), fields.next()) {
            (Some(token), Some(tag), None) if !token.is_empty() && !tag.trim().is_empty() => {
                (token, tag.trim())
            }
            _ => {
                return Err(MalformedLine {
                    line,
                    content: text.into(),
                })
            }
        };
        let Some(pos) = NounTag::from_tag(tag) else {
            return Ok(());
        };
        let surface = token.trim().to_lowercase();
        if !is_clean_noun(&surface) {
            return Ok(());
        }
        *self.counts.entry((surface, pos)).or_default() += 1;
        self.retained += 1;
        Ok(())
    }

    /// Number of noun lines kept so far.
    pub fn retained(&self) -> usize {
        self.retained
    }

    /// Records sorted by (surface, tag).
    pub fn finish(self) -> Vec<NounRecord> {
        self.counts
            .into_iter()
            .map(|((surface, pos), frequency)| NounRecord {
                surface,
                pos,
                frequency,
            })
            .collect()
    }
}

/// Extract NN/NNS nouns from a whole tagged document.
pub fn ingest_tagged(text: &str) -> Result<Vec<NounRecord>, MalformedLine> {
    let mut collector = NounCollector::new();
    for (i, line) in text.lines().enumerate() {
        collector.push_line(i + 1, line)?;
    }
    Ok(collector.finish())
}

/// Classification stopped by a transport failure; `completed` holds the
/// words classified before it.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("classification aborted after {} word(s): {error}", completed.len())]
pub struct InventoryError {
    pub completed: BTreeMap<String, ClassificationResult>,
    pub error: TransportError,
}

/// Classify each distinct surface form once.
pub fn classify_inventory(
    records: &[NounRecord],
    sources: &[&dyn DefinitionSource],
    params: &ClassifierParams,
    lexicon: &SeedLexicon,
) -> Result<BTreeMap<String, ClassificationResult>, InventoryError> {
    let mut results = BTreeMap::new();
    for record in records {
        if results.contains_key(&record.surface) {
            continue;
        }
        match classify(&record.surface, sources, params, lexicon) {
            Ok(result) => {
                results.insert(record.surface.clone(), result);
            }
            Err(ClassifyError::Transport(error)) => {
                return Err(InventoryError {
                    completed: results,
                    error,
                })
            }
            // records always carry non-empty surfaces
            Err(ClassifyError::EmptyWord) => continue,
            Err(ClassifyError::NoProviders) => {
                return Err(InventoryError {
                    completed: results,
                    error: TransportError::new("-", &record.surface, "no providers configured"),
                })
            }
        }
    }
    Ok(results)
}

/// Words that at least one provider (or a pre-dictionary heuristic)
/// labelled masculine or feminine, sorted.
pub fn gendered_sample(results: &BTreeMap<String, ClassificationResult>) -> Vec<String> {
    results
        .iter()
        .filter(|(_, r)| r.any_gendered())
        .map(|(w, _)| w.clone())
        .collect()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosCounts {
    #[serde(rename = "NN")]
    pub singular: usize,
    #[serde(rename = "NNS")]
    pub plural: usize,
    pub all: usize,
}

impl PosCounts {
    fn bump(&mut self, pos: NounTag) {
        match pos {
            NounTag::Singular => self.singular += 1,
            NounTag::Plural => self.plural += 1,
        }
        self.all += 1;
    }
}

/// Distinct nouns per combined label and POS tag.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionReport {
    pub masc: PosCounts,
    pub fem: PosCounts,
    pub neut: PosCounts,
    pub not_found: PosCounts,
    pub total: PosCounts,
}

impl CompositionReport {
    pub fn row(&self, label: GenderLabel) -> &PosCounts {
        match label {
            GenderLabel::Masc => &self.masc,
            GenderLabel::Fem => &self.fem,
            GenderLabel::Neut => &self.neut,
            GenderLabel::NotFound => &self.not_found,
        }
    }

    fn row_mut(&mut self, label: GenderLabel) -> &mut PosCounts {
        match label {
            GenderLabel::Masc => &mut self.masc,
            GenderLabel::Fem => &mut self.fem,
            GenderLabel::Neut => &mut self.neut,
            GenderLabel::NotFound => &mut self.not_found,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("no classification result for noun {0:?}")]
pub struct MissingResult(pub String);

/// Count each distinct (surface, tag) record once under its word's combined
/// label.
pub fn composition_report(
    results: &BTreeMap<String, ClassificationResult>,
    records: &[NounRecord],
) -> Result<CompositionReport, MissingResult> {
    let mut distinct: Vec<(&str, NounTag)> = records
        .iter()
        .map(|r| (r.surface.as_str(), r.pos))
        .collect();
    distinct.sort();
    distinct.dedup();
    let mut report = CompositionReport::default();
    for (surface, pos) in distinct {
        let label = results
            .get(surface)
            .ok_or_else(|| MissingResult(surface.into()))?
            .combined;
        report.row_mut(label).bump(pos);
        report.total.bump(pos);
    }
    Ok(report)
}

impl fmt::Display for CompositionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<10} {:>8} {:>8} {:>8}", "", "NN", "NNS", "all")?;
        let rows = [
            ("masc", &self.masc),
            ("fem", &self.fem),
            ("neut", &self.neut),
            ("not found", &self.not_found),
            ("all", &self.total),
        ];
        for (name, c) in rows {
            writeln!(
                f,
                "{:<10} {:>8} {:>8} {:>8}",
                name, c.singular, c.plural, c.all
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{ProviderVerdict, Route};
    use crate::lexicon::default_lexicon;
    use crate::source::StaticSource;
    use std::string::ToString;
    use GenderLabel::*;

    #[test]
    fn keeps_only_clean_nouns() {
        let text =
            "The\tDT\nnun\tNN\n\nkings\tNNS\nKings\tNNS\nf@@\tNN\nran\tVBD\nmother-in-law\tNN\n";
        let records = ingest_tagged(text).unwrap();
        assert_eq!(
            records,
            [
                NounRecord {
                    surface: "kings".into(),
                    pos: NounTag::Plural,
                    frequency: 2
                },
                NounRecord {
                    surface: "mother-in-law".into(),
                    pos: NounTag::Singular,
                    frequency: 1
                },
                NounRecord {
                    surface: "nun".into(),
                    pos: NounTag::Singular,
                    frequency: 1
                },
            ]
        );
    }

    #[test]
    fn malformed_lines_are_reported() {
        assert_eq!(
            ingest_tagged("nun\tNN\nbroken line\n"),
            Err(MalformedLine {
                line: 2,
                content: "broken line".into()
            })
        );
        assert!(ingest_tagged("a\tb\tc").is_err());
    }

    #[test]
    fn clean_filter() {
        assert!(is_clean_noun("o'clock"));
        assert!(is_clean_noun("café"));
        assert!(!is_clean_noun("f@@"));
        assert!(!is_clean_noun("1990s"));
        assert!(!is_clean_noun("--"));
    }

    fn result(word: &str, combined: GenderLabel, verdicts: &[GenderLabel]) -> ClassificationResult {
        ClassificationResult {
            word: word.into(),
            normalized: word.into(),
            route: Route::Dictionary,
            verdicts: verdicts
                .iter()
                .enumerate()
                .map(|(i, &label)| ProviderVerdict {
                    provider_id: std::format!("p{i}"),
                    label,
                    masc_count: 0,
                    fem_count: 0,
                    definitions_used: 0,
                })
                .collect(),
            combined,
        }
    }

    #[test]
    fn sample_uses_any_provider() {
        let mut results = BTreeMap::new();
        results.insert("b".to_string(), result("b", Neut, &[Neut, Neut, Masc]));
        results.insert("a".to_string(), result("a", Neut, &[Neut, Neut, Neut]));
        results.insert("c".to_string(), result("c", Neut, &[NotFound, Neut, Neut]));
        results.insert("d".to_string(), result("d", Fem, &[Fem, Fem, NotFound]));
        assert_eq!(gendered_sample(&results), ["b", "d"]);
    }

    #[test]
    fn composition_counts() {
        let records = [
            NounRecord {
                surface: "king".into(),
                pos: NounTag::Singular,
                frequency: 1,
            },
            NounRecord {
                surface: "queens".into(),
                pos: NounTag::Plural,
                frequency: 3,
            },
        ];
        let mut results = BTreeMap::new();
        results.insert("king".to_string(), result("king", Masc, &[Masc]));
        results.insert("queens".to_string(), result("queens", Fem, &[Fem]));
        let report = composition_report(&results, &records).unwrap();
        assert_eq!(report.masc.all, 1);
        assert_eq!(report.fem.all, 1);
        assert_eq!(report.fem.plural, 1);
        assert_eq!(report.total.all, 2);
        assert!(composition_report(&BTreeMap::new(), &records).is_err());
    }

    #[test]
    fn inventory_classifies_each_surface_once() {
        let src = StaticSource::new("wn")
            .with("nun", ["a woman religious"])
            .with("table", ["a piece of furniture having a smooth flat top"]);
        let records = ingest_tagged("nun\tNN\ntable\tNN\nnun\tNN\n").unwrap();
        let results = classify_inventory(
            &records,
            &[&src],
            &ClassifierParams::DEFAULT,
            &default_lexicon(),
        )
        .unwrap();
        assert_eq!(results.len(), 2);
        assert_eq!(results["nun"].combined, Fem);
        assert_eq!(results["table"].combined, Neut);
        assert!(
            classify_inventory(&[], &[&src], &ClassifierParams::DEFAULT, &default_lexicon())
                .unwrap()
                .is_empty()
        );
    }
}
