//! Frozen dictionary snapshots: one JSON file per provider capturing every
//! looked-up word's full definition list.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use lexgender_core::classify::{normalize, retry_form};
use lexgender_core::{DefinitionSet, DefinitionSource, TransportError};
use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnapshotEntry {
    pub found: bool,
    #[serde(default)]
    pub definitions: Vec<String>,
}

impl SnapshotEntry {
    pub fn not_found() -> Self {
        SnapshotEntry {
            found: false,
            definitions: Vec::new(),
        }
    }

    pub fn from_lookup(found: Option<&DefinitionSet>) -> Self {
        match found {
            Some(set) => SnapshotEntry {
                found: true,
                definitions: set.definitions.clone(),
            },
            None => Self::not_found(),
        }
    }

    pub fn into_lookup(self, word: &str, provider_id: &str) -> Option<DefinitionSet> {
        self.found.then(|| DefinitionSet {
            word: word.to_string(),
            provider_id: provider_id.to_string(),
            definitions: self.definitions,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Snapshot {
    pub provider: String,
    /// ISO-8601 capture time.
    pub captured_at: String,
    pub entries: BTreeMap<String, SnapshotEntry>,
}

impl Snapshot {
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self, Error> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text).map_err(|e| Error::json(path, e))
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("snapshot serializes");
        text.push('\n');
        text
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<(), Error> {
        crate::cache::write_atomic(path.as_ref(), self.to_json().as_bytes())
    }
}

/// Look every word up in `source` and freeze the answers. Words that are not
/// found also get their punctuation-stripped retry form recorded, so a
/// classifier reading the snapshot follows the same path as one reading the
/// live source.
pub fn capture<S: DefinitionSource + ?Sized>(
    source: &S,
    words: &[String],
    captured_at: String,
) -> Result<Snapshot, TransportError> {
    let mut entries = BTreeMap::new();
    for raw in words {
        let word = normalize(raw);
        if word.is_empty() || entries.contains_key(&word) {
            continue;
        }
        let found = source.lookup(&word)?;
        let missing = found.is_none();
        entries.insert(word.clone(), SnapshotEntry::from_lookup(found.as_ref()));
        if missing {
            if let Some(retry) = retry_form(&word) {
                if let std::collections::btree_map::Entry::Vacant(slot) = entries.entry(retry) {
                    let again = source.lookup(slot.key())?;
                    slot.insert(SnapshotEntry::from_lookup(again.as_ref()));
                }
            }
        }
    }
    Ok(Snapshot {
        provider: source.id().to_string(),
        captured_at,
        entries,
    })
}

pub fn now_iso8601() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

/// Provider answering from a snapshot. Absent words are not found.
#[derive(Debug, Clone)]
pub struct SnapshotProvider {
    snapshot: Snapshot,
}

impl SnapshotProvider {
    pub fn new(snapshot: Snapshot) -> Self {
        SnapshotProvider { snapshot }
    }

    pub fn open(path: impl AsRef<Path>) -> Result<Self, Error> {
        Snapshot::read(path).map(Self::new)
    }

    pub fn snapshot(&self) -> &Snapshot {
        &self.snapshot
    }
}

impl DefinitionSource for SnapshotProvider {
    fn id(&self) -> &str {
        &self.snapshot.provider
    }

    fn lookup(&self, word: &str) -> Result<Option<DefinitionSet>, TransportError> {
        Ok(self
            .snapshot
            .entries
            .get(word)
            .cloned()
            .and_then(|entry| entry.into_lookup(word, &self.snapshot.provider)))
    }
}
