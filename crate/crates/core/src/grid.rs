//! Exhaustive search over (d, t, w) for the best combined-label accuracy.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::classify::{lookup_with_retry, normalize, pre_dictionary, tokenize, GenderCounts};
use crate::eval::GoldEntry;
use crate::label::{Gender, GenderLabel};
use crate::lexicon::{SeedLexicon, SeedMatcher};
use crate::params::{ClassifierParams, GridRanges, ParamsError};
use crate::source::{DefinitionSource, TransportError};
use crate::vote::combine;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridCell {
    pub params: ClassifierParams,
    pub correct: usize,
    pub accuracy: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridReport {
    pub best: ClassifierParams,
    pub best_accuracy: f64,
    pub n: usize,
    /// Every evaluated cell in lexicographic (d, t, w) order.
    pub cells: Vec<GridCell>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GridError {
    #[error("grid search needs reproducible providers; {0:?} is live")]
    NonDeterministic(String),
    #[error("at least one dictionary provider is required")]
    NoProviders,
    #[error("grid ranges are empty")]
    EmptyGrid,
    #[error(transparent)]
    Params(#[from] ParamsError),
    #[error(transparent)]
    Transport(#[from] TransportError),
}

/// One gold word with everything that does not depend on the parameters
/// already resolved.
enum Prepared {
    Decided(GenderLabel),
    /// Per provider: tokenized definitions, or `None` if not found.
    Lookups(Vec<Option<Vec<Vec<String>>>>),
}

fn count_tokens(
    defs: &[Vec<String>],
    params: &ClassifierParams,
    matcher: &SeedMatcher,
) -> GenderCounts {
    let mut counts = GenderCounts::default();
    for def in defs.iter().take(params.max_definitions) {
        for token in def.iter().take(params.max_tokens) {
            match matcher.gender(token) {
                Some(Gender::Masculine) => counts.masc += 1,
                Some(Gender::Feminine) => counts.fem += 1,
                None => {}
            }
        }
    }
    counts
}

/// Combined-label accuracy for every cell; the best cell is the one with
/// the most correct gold rows, ties going to the smallest (d, t, w).
pub fn grid_search(
    gold: &[GoldEntry],
    sources: &[&dyn DefinitionSource],
    lexicon: &SeedLexicon,
    ranges: &GridRanges,
) -> Result<GridReport, GridError> {
    if sources.is_empty() {
        return Err(GridError::NoProviders);
    }
    if let Some(live) = sources.iter().find(|s| !s.is_deterministic()) {
        return Err(GridError::NonDeterministic(live.id().into()));
    }
    let cells = ranges.cells()?;
    if cells.is_empty() {
        return Err(GridError::EmptyGrid);
    }

    let mut prepared: BTreeMap<String, Prepared> = BTreeMap::new();
    for entry in gold {
        let word = normalize(&entry.word);
        if prepared.contains_key(&word) {
            continue;
        }
        let item = match pre_dictionary(&word, lexicon) {
            Some((_, label)) => Prepared::Decided(label),
            None => {
                let mut lookups = Vec::with_capacity(sources.len());
                for source in sources {
                    lookups.push(
                        lookup_with_retry(*source, &word)?
                            .map(|set| set.definitions.iter().map(|d| tokenize(d)).collect()),
                    );
                }
                Prepared::Lookups(lookups)
            }
        };
        prepared.insert(word, item);
    }
    let rows: Vec<(&Prepared, GenderLabel)> = gold
        .iter()
        .map(|e| (&prepared[&normalize(&e.word)], e.label))
        .collect();

    let matchers: Vec<SeedMatcher> = (0..=crate::lexicon::SEED_PAIR_COUNT)
        .map(|w| lexicon.matcher(w))
        .collect();
    let n = gold.len();
    let mut evaluated = Vec::with_capacity(cells.len());
    let mut labels = Vec::with_capacity(sources.len());
    for params in cells {
        let matcher = &matchers[params.seed_pairs];
        let mut correct = 0;
        for (item, gold_label) in &rows {
            let predicted = match item {
                Prepared::Decided(label) => *label,
                Prepared::Lookups(lookups) => {
                    labels.clear();
                    labels.extend(lookups.iter().map(|found| match found {
                        None => GenderLabel::NotFound,
                        Some(defs) => count_tokens(defs, &params, matcher).label(),
                    }));
                    combine(&labels).expect("non-empty provider list")
                }
            };
            if predicted == *gold_label {
                correct += 1;
            }
        }
        evaluated.push(GridCell {
            params,
            correct,
            accuracy: if n == 0 {
                0.0
            } else {
                correct as f64 / n as f64
            },
        });
    }

    let best = evaluated
        .iter()
        .max_by(|a, b| a.correct.cmp(&b.correct).then(b.params.cmp(&a.params)))
        .expect("non-empty grid");
    Ok(GridReport {
        best: best.params,
        best_accuracy: best.accuracy,
        n,
        cells: evaluated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::GoldCategory;
    use crate::lexicon::default_lexicon;
    use crate::source::{DefinitionSet, StaticSource};

    fn entry(w: &str, l: GenderLabel) -> GoldEntry {
        GoldEntry {
            word: w.into(),
            label: l,
            category: GoldCategory::Misc,
        }
    }

    #[test]
    fn singleton_grid_returns_its_cell() {
        let src = StaticSource::new("s").with("nun", ["a woman religious"]);
        let gold = [entry("nun", GenderLabel::Fem)];
        let report = grid_search(
            &gold,
            &[&src],
            &default_lexicon(),
            &GridRanges::single(ClassifierParams::DEFAULT),
        )
        .unwrap();
        assert_eq!(report.best, ClassifierParams::DEFAULT);
        assert_eq!(report.cells.len(), 1);
        assert_eq!(report.best_accuracy, 1.0);
    }

    #[test]
    fn ties_go_to_smallest_cell() {
        let src = StaticSource::new("s").with("nun", ["a woman religious"]);
        let gold = [entry("nun", GenderLabel::Fem)];
        let report =
            grid_search(&gold, &[&src], &default_lexicon(), &GridRanges::standard()).unwrap();
        assert_eq!(report.cells.len(), 441);
        assert_eq!(report.best.as_tuple(), (2, 5, 2));
    }

    #[test]
    fn prefers_cells_that_see_signal() {
        // the gendered word only appears in the 5th definition
        let src = StaticSource::new("s").with(
            "abbess",
            ["one", "two", "three", "four", "the mother superior"],
        );
        let gold = [entry("abbess", GenderLabel::Fem)];
        let report =
            grid_search(&gold, &[&src], &default_lexicon(), &GridRanges::standard()).unwrap();
        assert_eq!(report.best.as_tuple(), (5, 5, 5));
    }

    #[test]
    fn order_of_ranges_does_not_matter() {
        let src = StaticSource::new("s")
            .with(
                "abbess",
                ["one", "two", "three", "four", "the mother superior"],
            )
            .with("king", ["a male sovereign; ruler of a kingdom"]);
        let gold = [
            entry("abbess", GenderLabel::Fem),
            entry("king", GenderLabel::Masc),
        ];
        let lex = default_lexicon();
        let forward = grid_search(&gold, &[&src], &lex, &GridRanges::standard()).unwrap();
        let mut reversed = GridRanges::standard();
        reversed.definitions.reverse();
        reversed.tokens.reverse();
        reversed.seed_pairs.reverse();
        let backward = grid_search(&gold, &[&src], &lex, &reversed).unwrap();
        assert_eq!(forward, backward);
    }

    struct Live;
    impl DefinitionSource for Live {
        fn id(&self) -> &str {
            "mw"
        }
        fn lookup(&self, _: &str) -> Result<Option<DefinitionSet>, TransportError> {
            Ok(None)
        }
        fn is_deterministic(&self) -> bool {
            false
        }
    }

    #[test]
    fn rejects_live_providers() {
        let gold = [entry("nun", GenderLabel::Fem)];
        assert_eq!(
            grid_search(&gold, &[&Live], &default_lexicon(), &GridRanges::standard()),
            Err(GridError::NonDeterministic("mw".into()))
        );
        let empty = GridRanges {
            definitions: alloc::vec![],
            ..GridRanges::standard()
        };
        let src = StaticSource::new("s");
        assert_eq!(
            grid_search(&gold, &[&src], &default_lexicon(), &empty),
            Err(GridError::EmptyGrid)
        );
    }
}
