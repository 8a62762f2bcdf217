//! Dictionary lookup abstraction shared by every provider.

use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

/// Definitions of one word from one provider, in the order the source lists
/// them (earlier senses are the more general ones).
///
/// An empty `definitions` list means the word exists but has no usable
/// definitions; a missing word is `Ok(None)` from [`DefinitionSource::lookup`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefinitionSet {
    pub word: String,
    pub provider_id: String,
    pub definitions: Vec<String>,
}

/// Failure to reach or understand a dictionary. Never a synonym for "word
/// not found".
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{provider}: transport error looking up {word:?}: {message}")]
pub struct TransportError {
    pub provider: String,
    pub word: String,
    pub message: String,
}

impl TransportError {
    pub fn new(provider: &str, word: &str, message: impl Into<String>) -> Self {
        TransportError {
            provider: provider.into(),
            word: word.into(),
            message: message.into(),
        }
    }
}

pub trait DefinitionSource {
    fn id(&self) -> &str;

    /// Noun definitions for `word` (lowercase, trimmed), or `Ok(None)` when
    /// the source does not know the word.
    fn lookup(&self, word: &str) -> Result<Option<DefinitionSet>, TransportError>;

    /// Whether lookups are reproducible without network access. Grid search
    /// refuses sources that are not.
    fn is_deterministic(&self) -> bool {
        true
    }
}

impl<S: DefinitionSource + ?Sized> DefinitionSource for &S {
    fn id(&self) -> &str {
        (**self).id()
    }

    fn lookup(&self, word: &str) -> Result<Option<DefinitionSet>, TransportError> {
        (**self).lookup(word)
    }

    fn is_deterministic(&self) -> bool {
        (**self).is_deterministic()
    }
}

impl<S: DefinitionSource + ?Sized> DefinitionSource for alloc::boxed::Box<S> {
    fn id(&self) -> &str {
        (**self).id()
    }

    fn lookup(&self, word: &str) -> Result<Option<DefinitionSet>, TransportError> {
        (**self).lookup(word)
    }

    fn is_deterministic(&self) -> bool {
        (**self).is_deterministic()
    }
}

/// In-memory source, mostly for tests and fixtures.
#[derive(Debug, Clone, Default)]
pub struct StaticSource {
    id: String,
    entries: alloc::collections::BTreeMap<String, Vec<String>>,
}

impl StaticSource {
    pub fn new(id: impl Into<String>) -> Self {
        StaticSource {
            id: id.into(),
            entries: Default::default(),
        }
    }

    pub fn with<I, S>(mut self, word: &str, definitions: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.insert(word, definitions);
        self
    }

    pub fn insert<I, S>(&mut self, word: &str, definitions: I)
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.entries.insert(
            word.into(),
            definitions.into_iter().map(Into::into).collect(),
        );
    }
}

impl DefinitionSource for StaticSource {
    fn id(&self) -> &str {
        &self.id
    }

    fn lookup(&self, word: &str) -> Result<Option<DefinitionSet>, TransportError> {
        Ok(self.entries.get(word).map(|defs| DefinitionSet {
            word: word.into(),
            provider_id: self.id.clone(),
            definitions: defs.clone(),
        }))
    }
}
