//! Seed shortcut, suffix heuristic, seed-word counting and the full
//! per-word pipeline.

use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::label::{Gender, GenderLabel};
use crate::lexicon::{SeedLexicon, SeedMatcher};
use crate::params::ClassifierParams;
use crate::source::{DefinitionSet, DefinitionSource, TransportError};
use crate::vote::combine;

/// Which stage of the pipeline decided the label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    SeedShortcut,
    SuffixHeuristic,
    Dictionary,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::SeedShortcut => "seed_shortcut",
            Route::SuffixHeuristic => "suffix_heuristic",
            Route::Dictionary => "dictionary",
        }
    }
}

impl core::fmt::Display for Route {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.pad(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenderCounts {
    pub masc: usize,
    pub fem: usize,
}

impl GenderCounts {
    /// More masculine than feminine hits is masculine and vice versa; equal
    /// counts (including none at all) are neutral.
    pub fn label(self) -> GenderLabel {
        match self.masc.cmp(&self.fem) {
            core::cmp::Ordering::Greater => GenderLabel::Masc,
            core::cmp::Ordering::Less => GenderLabel::Fem,
            core::cmp::Ordering::Equal => GenderLabel::Neut,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProviderVerdict {
    pub provider_id: String,
    pub label: GenderLabel,
    pub masc_count: usize,
    pub fem_count: usize,
    pub definitions_used: usize,
}

impl ProviderVerdict {
    fn not_found(provider_id: &str) -> Self {
        ProviderVerdict {
            provider_id: provider_id.into(),
            label: GenderLabel::NotFound,
            masc_count: 0,
            fem_count: 0,
            definitions_used: 0,
        }
    }

    pub(crate) fn from_counts(provider_id: &str, counts: GenderCounts, used: usize) -> Self {
        ProviderVerdict {
            provider_id: provider_id.into(),
            label: counts.label(),
            masc_count: counts.masc,
            fem_count: counts.fem,
            definitions_used: used,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationResult {
    pub word: String,
    pub normalized: String,
    pub route: Route,
    /// Empty unless `route` is `Dictionary`.
    pub verdicts: Vec<ProviderVerdict>,
    pub combined: GenderLabel,
}

impl ClassificationResult {
    /// Label this word receives when only `provider_id` is consulted. Words
    /// decided before any lookup carry the same label for every provider.
    pub fn provider_label(&self, provider_id: &str) -> Option<GenderLabel> {
        match self.route {
            Route::Dictionary => self
                .verdicts
                .iter()
                .find(|v| v.provider_id == provider_id)
                .map(|v| v.label),
            _ => Some(self.combined),
        }
    }

    /// True if any single provider (or a heuristic) labelled the word
    /// masculine or feminine.
    pub fn any_gendered(&self) -> bool {
        match self.route {
            Route::Dictionary => self.verdicts.iter().any(|v| v.label.is_gendered()),
            _ => self.combined.is_gendered(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("cannot classify an empty word")]
    EmptyWord,
    #[error("at least one dictionary provider is required")]
    NoProviders,
    #[error(transparent)]
    Transport(#[from] TransportError),
}

pub fn normalize(word: &str) -> String {
    word.trim().to_lowercase()
}

/// Whitespace split, outer punctuation stripped, lowercased. Internal
/// hyphens and apostrophes survive.
pub fn tokenize(definition: &str) -> Vec<String> {
    definition
        .split_whitespace()
        .map(|raw| raw.trim_matches(|c: char| !c.is_alphanumeric()))
        .filter(|t| !t.is_empty())
        .map(|t| t.to_lowercase())
        .collect()
}

/// A seed form or its plural is labelled directly, using all pairs.
pub fn seed_shortcut(word: &str, lexicon: &SeedLexicon) -> Option<GenderLabel> {
    lexicon.gender_of(word).map(GenderLabel::from)
}

/// `-woman`/`-girl` endings are feminine, `-man`/`-boy` endings masculine.
/// `-woman` and `-human` endings never count as `-man`.
pub fn suffix_heuristic(word: &str) -> Option<GenderLabel> {
    if word.ends_with("woman") || word.ends_with("girl") {
        Some(GenderLabel::Fem)
    } else if word.ends_with("boy") || (word.ends_with("man") && !word.ends_with("human")) {
        Some(GenderLabel::Masc)
    } else {
        None
    }
}

/// Seed-word hits over the first `d` definitions and first `t` tokens of
/// each, against the first `w` pairs (plurals included). Whole-token
/// equality only, so "female" never counts as "male".
pub fn count_gendered(
    defs: &DefinitionSet,
    params: &ClassifierParams,
    lexicon: &SeedLexicon,
) -> GenderCounts {
    let matcher = lexicon.matcher(params.seed_pairs);
    count_definitions(&defs.definitions, params, &matcher)
}

pub(crate) fn count_definitions<S: AsRef<str>>(
    definitions: &[S],
    params: &ClassifierParams,
    matcher: &SeedMatcher,
) -> GenderCounts {
    let mut counts = GenderCounts::default();
    for def in definitions.iter().take(params.max_definitions) {
        for token in tokenize(def.as_ref()).iter().take(params.max_tokens) {
            match matcher.gender(token) {
                Some(Gender::Masculine) => counts.masc += 1,
                Some(Gender::Feminine) => counts.fem += 1,
                None => {}
            }
        }
    }
    counts
}

/// Verdict from a single provider for `word` as given (no punctuation retry).
pub fn classify_with_provider(
    source: &dyn DefinitionSource,
    word: &str,
    params: &ClassifierParams,
    lexicon: &SeedLexicon,
) -> Result<ProviderVerdict, TransportError> {
    let found = source.lookup(word)?;
    Ok(verdict_for(source.id(), found.as_ref(), params, lexicon))
}

fn verdict_for(
    provider_id: &str,
    found: Option<&DefinitionSet>,
    params: &ClassifierParams,
    lexicon: &SeedLexicon,
) -> ProviderVerdict {
    match found {
        None => ProviderVerdict::not_found(provider_id),
        Some(defs) => ProviderVerdict::from_counts(
            provider_id,
            count_gendered(defs, params, lexicon),
            defs.definitions.len().min(params.max_definitions),
        ),
    }
}

/// The word with punctuation and whitespace removed, when that changes it.
pub fn retry_form(word: &str) -> Option<String> {
    let stripped: String = word.chars().filter(|c| c.is_alphanumeric()).collect();
    (!stripped.is_empty() && stripped != word).then_some(stripped)
}

/// Look `word` up, retrying without punctuation or whitespace if the first
/// attempt finds nothing.
pub fn lookup_with_retry(
    source: &dyn DefinitionSource,
    word: &str,
) -> Result<Option<DefinitionSet>, TransportError> {
    if let Some(found) = source.lookup(word)? {
        return Ok(Some(found));
    }
    match retry_form(word) {
        Some(retry) => source.lookup(&retry),
        None => Ok(None),
    }
}

/// Label decided before any dictionary is consulted.
pub fn pre_dictionary(word: &str, lexicon: &SeedLexicon) -> Option<(Route, GenderLabel)> {
    seed_shortcut(word, lexicon)
        .map(|l| (Route::SeedShortcut, l))
        .or_else(|| suffix_heuristic(word).map(|l| (Route::SuffixHeuristic, l)))
}

/// Full pipeline: normalize, seed shortcut, suffix heuristic, then one
/// verdict per provider (with punctuation retry) fused by majority vote.
pub fn classify(
    word: &str,
    sources: &[&dyn DefinitionSource],
    params: &ClassifierParams,
    lexicon: &SeedLexicon,
) -> Result<ClassificationResult, ClassifyError> {
    let normalized = normalize(word);
    if normalized.is_empty() {
        return Err(ClassifyError::EmptyWord);
    }
    if sources.is_empty() {
        return Err(ClassifyError::NoProviders);
    }
    if let Some((route, combined)) = pre_dictionary(&normalized, lexicon) {
        return Ok(ClassificationResult {
            word: word.into(),
            normalized,
            route,
            verdicts: Vec::new(),
            combined,
        });
    }
    let mut verdicts = Vec::with_capacity(sources.len());
    for source in sources {
        let found = lookup_with_retry(*source, &normalized)?;
        verdicts.push(verdict_for(source.id(), found.as_ref(), params, lexicon));
    }
    let labels: Vec<GenderLabel> = verdicts.iter().map(|v| v.label).collect();
    let combined = combine(&labels).expect("at least one provider");
    Ok(ClassificationResult {
        word: word.into(),
        normalized,
        route: Route::Dictionary,
        verdicts,
        combined,
    })
}
