use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::lexicon::SEED_PAIR_COUNT;

/// Limits applied when counting seed words in definitions.
///
/// `max_definitions` (d) keeps only the earliest, most general senses,
/// `max_tokens` (t) looks at the start of each definition, and `seed_pairs`
/// (w) selects how many ranked seed pairs are counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ClassifierParams {
    #[serde(rename = "d")]
    pub max_definitions: usize,
    #[serde(rename = "t")]
    pub max_tokens: usize,
    #[serde(rename = "w")]
    pub seed_pairs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParamsError {
    #[error("d (definitions per dictionary) must be at least 1")]
    Definitions,
    #[error("t (tokens per definition) must be at least 1")]
    Tokens,
    #[error("w (seed pairs) must be between 1 and {SEED_PAIR_COUNT}, got {0}")]
    SeedPairs(usize),
}

impl ClassifierParams {
    pub const DEFAULT: ClassifierParams = ClassifierParams {
        max_definitions: 4,
        max_tokens: 20,
        seed_pairs: 5,
    };

    pub fn new(d: usize, t: usize, w: usize) -> Result<Self, ParamsError> {
        if d == 0 {
            return Err(ParamsError::Definitions);
        }
        if t == 0 {
            return Err(ParamsError::Tokens);
        }
        if !(1..=SEED_PAIR_COUNT).contains(&w) {
            return Err(ParamsError::SeedPairs(w));
        }
        Ok(ClassifierParams {
            max_definitions: d,
            max_tokens: t,
            seed_pairs: w,
        })
    }

    pub fn as_tuple(&self) -> (usize, usize, usize) {
        (self.max_definitions, self.max_tokens, self.seed_pairs)
    }
}

impl Default for ClassifierParams {
    fn default() -> Self {
        Self::DEFAULT
    }
}

impl fmt::Display for ClassifierParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "d={} t={} w={}",
            self.max_definitions, self.max_tokens, self.seed_pairs
        )
    }
}

/// Candidate values for each parameter in a grid search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridRanges {
    pub definitions: Vec<usize>,
    pub tokens: Vec<usize>,
    pub seed_pairs: Vec<usize>,
}

impl GridRanges {
    /// d in 2..=10, t in {5, 10, ..., 35}, w in 2..=8: 441 cells.
    pub fn standard() -> Self {
        GridRanges {
            definitions: (2..=10).collect(),
            tokens: (1..=7).map(|k| 5 * k).collect(),
            seed_pairs: (2..=8).collect(),
        }
    }

    pub fn single(params: ClassifierParams) -> Self {
        GridRanges {
            definitions: alloc::vec![params.max_definitions],
            tokens: alloc::vec![params.max_tokens],
            seed_pairs: alloc::vec![params.seed_pairs],
        }
    }

    /// Every cell in lexicographic (d, t, w) order, with duplicates removed.
    pub fn cells(&self) -> Result<Vec<ClassifierParams>, ParamsError> {
        let mut cells =
            Vec::with_capacity(self.definitions.len() * self.tokens.len() * self.seed_pairs.len());
        for &d in &self.definitions {
            for &t in &self.tokens {
                for &w in &self.seed_pairs {
                    cells.push(ClassifierParams::new(d, t, w)?);
                }
            }
        }
        cells.sort();
        cells.dedup();
        Ok(cells)
    }
}

impl Default for GridRanges {
    fn default() -> Self {
        Self::standard()
    }
}
