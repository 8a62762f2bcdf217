//! Gold standard parsing, support-weighted metrics and confusion matrices.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classify::ClassificationResult;
use crate::label::GenderLabel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GoldCategory {
    Family,
    Misc,
    Occupation,
    Religion,
    Title,
}

impl GoldCategory {
    pub fn as_str(self) -> &'static str {
        match self {
            GoldCategory::Family => "family",
            GoldCategory::Misc => "misc",
            GoldCategory::Occupation => "occupation",
            GoldCategory::Religion => "religion",
            GoldCategory::Title => "title",
        }
    }
}

impl FromStr for GoldCategory {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "family" => GoldCategory::Family,
            "misc" => GoldCategory::Misc,
            "occupation" => GoldCategory::Occupation,
            "religion" => GoldCategory::Religion,
            "title" => GoldCategory::Title,
            _ => return Err(()),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldEntry {
    pub word: String,
    pub label: GenderLabel,
    pub category: GoldCategory,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GoldError {
    #[error("line {line}: expected word<TAB>label<TAB>category, got {found} field(s)")]
    FieldCount { line: usize, found: usize },
    #[error("line {line}: empty word")]
    EmptyWord { line: usize },
    #[error("line {line}: word {word:?} must be lowercase")]
    NotLowercase { line: usize, word: String },
    #[error("line {line}: invalid gold label {label:?} (expected masc, fem or neut)")]
    Label { line: usize, label: String },
    #[error("line {line}: unknown category {category:?}")]
    Category { line: usize, category: String },
    #[error(
        "line {line}: {word:?} is labelled {label} but line {first_line} labels it {first_label}"
    )]
    ConflictingLabel {
        line: usize,
        word: String,
        label: GenderLabel,
        first_line: usize,
        first_label: GenderLabel,
    },
}

/// Parse the gold TSV format: `word<TAB>label<TAB>category`, `#` comments and
/// blank lines ignored.
///
/// A word may appear on several rows with the same label (the gold table
/// repeats words that pair with more than one counterpart); each row is one
/// evaluation instance. A word listed under two different labels is an error.
pub fn parse_gold(text: &str) -> Result<Vec<GoldEntry>, GoldError> {
    let mut entries = Vec::new();
    let mut first_seen: BTreeMap<String, (usize, GenderLabel)> = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim_end_matches('\r');
        if trimmed.trim().is_empty() || trimmed.trim_start().starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split('\t').collect();
        if fields.len() != 3 {
            return Err(GoldError::FieldCount {
                line,
                found: fields.len(),
            });
        }
        let word = fields[0].trim();
        if word.is_empty() {
            return Err(GoldError::EmptyWord { line });
        }
        if word.to_lowercase() != word {
            return Err(GoldError::NotLowercase {
                line,
                word: word.into(),
            });
        }
        let label = match fields[1].trim().parse::<GenderLabel>() {
            Ok(l) if l != GenderLabel::NotFound => l,
            _ => {
                return Err(GoldError::Label {
                    line,
                    label: fields[1].into(),
                })
            }
        };
        let category =
            fields[2]
                .trim()
                .parse::<GoldCategory>()
                .map_err(|_| GoldError::Category {
                    line,
                    category: fields[2].into(),
                })?;
        match first_seen.get(word) {
            Some(&(first_line, first_label)) if first_label != label => {
                return Err(GoldError::ConflictingLabel {
                    line,
                    word: word.into(),
                    label,
                    first_line,
                    first_label,
                });
            }
            Some(_) => {}
            None => {
                first_seen.insert(word.into(), (line, label));
            }
        }
        entries.push(GoldEntry {
            word: word.into(),
            label,
            category,
        });
    }
    Ok(entries)
}

/// Gold {masc, fem, neut} rows × predicted {masc, fem, neut, not_found}
/// columns.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ConfusionMatrix {
    pub counts: [[usize; 4]; 3],
}

impl ConfusionMatrix {
    pub fn record(&mut self, gold: GenderLabel, predicted: GenderLabel) {
        debug_assert!(gold != GenderLabel::NotFound);
        self.counts[gold.index()][predicted.index()] += 1;
    }

    pub fn get(&self, gold: GenderLabel, predicted: GenderLabel) -> usize {
        self.counts[gold.index()][predicted.index()]
    }

    pub fn total(&self) -> usize {
        self.counts.iter().flatten().sum()
    }

    pub fn diagonal(&self) -> usize {
        (0..3).map(|i| self.counts[i][i]).sum()
    }

    pub fn row_sum(&self, gold: GenderLabel) -> usize {
        self.counts[gold.index()].iter().sum()
    }

    pub fn column_sum(&self, predicted: GenderLabel) -> usize {
        self.counts.iter().map(|row| row[predicted.index()]).sum()
    }
}

#[derive(Serialize, Deserialize)]
struct LabeledMatrix {
    rows: Vec<GenderLabel>,
    columns: Vec<GenderLabel>,
    counts: Vec<Vec<usize>>,
}

impl Serialize for ConfusionMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        LabeledMatrix {
            rows: GenderLabel::GOLD.to_vec(),
            columns: GenderLabel::ALL.to_vec(),
            counts: self.counts.iter().map(|r| r.to_vec()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ConfusionMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let m = LabeledMatrix::deserialize(deserializer)?;
        if m.rows != GenderLabel::GOLD || m.columns != GenderLabel::ALL {
            return Err(D::Error::custom("unexpected confusion matrix axes"));
        }
        let mut counts = [[0; 4]; 3];
        if m.counts.len() != 3 || m.counts.iter().any(|r| r.len() != 4) {
            return Err(D::Error::custom("confusion matrix must be 3x4"));
        }
        for (dst, src) in counts.iter_mut().zip(&m.counts) {
            dst.copy_from_slice(src);
        }
        Ok(ConfusionMatrix { counts })
    }
}

impl fmt::Display for ConfusionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:>10}", "gold\\pred")?;
        for col in GenderLabel::ALL {
            write!(f, " {:>10}", col.as_str())?;
        }
        writeln!(f)?;
        for row in GenderLabel::GOLD {
            write!(f, "{:>10}", row.as_str())?;
            for col in GenderLabel::ALL {
                write!(f, " {:>10}", self.get(row, col))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metrics {
    pub n: usize,
    pub accuracy: f64,
    pub weighted_precision: f64,
    pub weighted_recall: f64,
    pub weighted_f1: f64,
    pub confusion: ConfusionMatrix,
}

impl Metrics {
    /// Support-weighted precision, recall and F1 over the gold classes.
    /// A class with no predicted instances has precision 0.
    pub fn from_confusion(confusion: ConfusionMatrix) -> Self {
        let n = confusion.total();
        if n == 0 {
            return Metrics {
                n,
                accuracy: 0.0,
                weighted_precision: 0.0,
                weighted_recall: 0.0,
                weighted_f1: 0.0,
                confusion,
            };
        }
        let (mut p, mut r, mut f1) = (0.0, 0.0, 0.0);
        for class in GenderLabel::GOLD {
            let support = confusion.row_sum(class);
            if support == 0 {
                continue;
            }
            let tp = confusion.get(class, class) as f64;
            let predicted = confusion.column_sum(class);
            let precision = if predicted == 0 {
                0.0
            } else {
                tp / predicted as f64
            };
            let recall = tp / support as f64;
            let f = if precision + recall == 0.0 {
                0.0
            } else {
                2.0 * precision * recall / (precision + recall)
            };
            let weight = support as f64;
            p += weight * precision;
            r += weight * recall;
            f1 += weight * f;
        }
        let total = n as f64;
        Metrics {
            n,
            accuracy: confusion.diagonal() as f64 / total,
            weighted_precision: p / total,
            weighted_recall: r / total,
            weighted_f1: f1 / total,
            confusion,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("no prediction for gold word {0:?}")]
    MissingPrediction(String),
}

/// Score `predictions` against every gold row. `NotFound` predictions are
/// wrong for any gold class unless `fold_not_found` maps them to `Neut`.
pub fn evaluate(
    predictions: &BTreeMap<String, GenderLabel>,
    gold: &[GoldEntry],
    fold_not_found: bool,
) -> Result<Metrics, EvalError> {
    let mut confusion = ConfusionMatrix::default();
    for entry in gold {
        let mut predicted = *predictions
            .get(&entry.word)
            .ok_or_else(|| EvalError::MissingPrediction(entry.word.clone()))?;
        if fold_not_found && predicted == GenderLabel::NotFound {
            predicted = GenderLabel::Neut;
        }
        confusion.record(entry.label, predicted);
    }
    Ok(Metrics::from_confusion(confusion))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub combined: Metrics,
    pub per_provider: BTreeMap<String, Metrics>,
}

/// Combined and per-provider metrics from full classification results.
pub fn evaluate_results(
    results: &BTreeMap<String, ClassificationResult>,
    provider_ids: &[&str],
    gold: &[GoldEntry],
    fold_not_found: bool,
) -> Result<EvalReport, EvalError> {
    let combined: BTreeMap<String, GenderLabel> = results
        .iter()
        .map(|(w, r)| (w.clone(), r.combined))
        .collect();
    let mut per_provider = BTreeMap::new();
    for id in provider_ids {
        let labels: BTreeMap<String, GenderLabel> = results
            .iter()
            .map(|(w, r)| {
                (
                    w.clone(),
                    r.provider_label(id).unwrap_or(GenderLabel::NotFound),
                )
            })
            .collect();
        per_provider.insert(id.to_string(), evaluate(&labels, gold, fold_not_found)?);
    }
    Ok(EvalReport {
        combined: evaluate(&combined, gold, fold_not_found)?,
        per_provider,
    })
}
