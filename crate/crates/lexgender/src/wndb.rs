//! Reader for the WordNet database text format (`index.noun` + `data.noun`).

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};

use lexgender_core::{DefinitionSet, DefinitionSource, TransportError};

#[derive(Debug, thiserror::Error)]
pub enum WndbError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{file}:{line}: malformed record: {reason}")]
    Malformed {
        file: &'static str,
        line: usize,
        reason: String,
    },
}

fn malformed(file: &'static str, line: usize, reason: impl Into<String>) -> WndbError {
    WndbError::Malformed {
        file,
        line,
        reason: reason.into(),
    }
}

/// Lemma → glosses, in `index.noun` sense order.
#[derive(Debug, Default, Clone)]
pub struct NounIndex {
    glosses: Vec<String>,
    lemmas: HashMap<String, Vec<usize>>,
}

impl NounIndex {
    /// Parse `index.noun` and `data.noun` from a WNDB `dict` directory.
    pub fn load(dir: impl AsRef<Path>) -> Result<Self, WndbError> {
        let dir = dir.as_ref();
        let read = |name: &str| {
            let path = dir.join(name);
            fs::read(&path)
                .map(|bytes| String::from_utf8_lossy(&bytes).into_owned())
                .map_err(|source| WndbError::Io { path, source })
        };
        let data = read("data.noun")?;
        let index = read("index.noun")?;
        Self::parse(&index, &data)
    }

    pub fn parse(index_noun: &str, data_noun: &str) -> Result<Self, WndbError> {
        let mut glosses = Vec::new();
        let mut by_offset: HashMap<u64, usize> = HashMap::new();
        for (i, line) in data_noun.lines().enumerate() {
            let Some((offset, gloss)) = parse_data_line(i + 1, line)? else {
                continue;
            };
            by_offset.insert(offset, glosses.len());
            glosses.push(gloss);
        }

        let mut lemmas = HashMap::new();
        for (i, line) in index_noun.lines().enumerate() {
            let lineno = i + 1;
            let Some((lemma, offsets)) = parse_index_line(lineno, line)? else {
                continue;
            };
            let senses = offsets
                .iter()
                .map(|off| {
                    by_offset.get(off).copied().ok_or_else(|| {
                        malformed(
                            "index.noun",
                            lineno,
                            format!("synset {off:08} not present in data.noun"),
                        )
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            lemmas.insert(lemma, senses);
        }
        Ok(NounIndex { glosses, lemmas })
    }

    pub fn len(&self) -> usize {
        self.lemmas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lemmas.is_empty()
    }

    pub fn synset_count(&self) -> usize {
        self.glosses.len()
    }

    /// Glosses for an exact lemma key (lowercase, underscores for spaces).
    pub fn glosses(&self, lemma: &str) -> Option<Vec<&str>> {
        self.lemmas
            .get(lemma)
            .map(|senses| senses.iter().map(|&i| self.glosses[i].as_str()).collect())
    }

    pub fn contains(&self, lemma: &str) -> bool {
        self.lemmas.contains_key(lemma)
    }
}

fn is_license_line(line: &str) -> bool {
    line.starts_with("  ")
}

/// `lemma pos synset_cnt p_cnt [ptr_symbol...] sense_cnt tagsense_cnt offset...`
fn parse_index_line(lineno: usize, line: &str) -> Result<Option<(String, Vec<u64>)>, WndbError> {
    if is_license_line(line) || line.trim().is_empty() {
        return Ok(None);
    }
    let bad = |reason: &str| malformed("index.noun", lineno, reason);
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() < 6 {
        return Err(bad("too few fields"));
    }
    if fields[1] != "n" {
        return Err(bad("part of speech is not n"));
    }
    let synset_cnt: usize = fields[2].parse().map_err(|_| bad("bad synset_cnt"))?;
    let p_cnt: usize = fields[3].parse().map_err(|_| bad("bad p_cnt"))?;
    let expected = 4 + p_cnt + 2 + synset_cnt;
    if fields.len() != expected {
        return Err(bad(&format!(
            "expected {expected} fields for {synset_cnt} synset(s) and {p_cnt} pointer(s), found {}",
            fields.len()
        )));
    }
    let offsets = fields[expected - synset_cnt..]
        .iter()
        .map(|f| parse_offset(f).ok_or_else(|| bad("bad synset offset")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Some((fields[0].to_lowercase(), offsets)))
}

/// `offset lex_filenum ss_type w_cnt word lex_id ... p_cnt ... | gloss`
fn parse_data_line(lineno: usize, line: &str) -> Result<Option<(u64, String)>, WndbError> {
    if is_license_line(line) || line.trim().is_empty() {
        return Ok(None);
    }
    let bad = |reason: &str| malformed("data.noun", lineno, reason);
    let (head, gloss) = line
        .split_once(" | ")
        .ok_or_else(|| bad("missing gloss separator"))?;
    let fields: Vec<&str> = head.split_whitespace().collect();
    if fields.len() < 6 {
        return Err(bad("too few fields"));
    }
    let offset = parse_offset(fields[0]).ok_or_else(|| bad("bad synset offset"))?;
    if !matches!(fields[2], "n") {
        return Err(bad("synset type is not n"));
    }
    let w_cnt = usize::from_str_radix(fields[3], 16).map_err(|_| bad("bad w_cnt"))?;
    if w_cnt == 0 || fields.len() < 4 + 2 * w_cnt + 1 {
        return Err(bad("word list shorter than w_cnt"));
    }
    Ok(Some((offset, gloss.trim().to_string())))
}

fn parse_offset(field: &str) -> Option<u64> {
    (field.len() == 8 && field.bytes().all(|b| b.is_ascii_digit()))
        .then(|| field.parse().ok())
        .flatten()
}

const NOUN_DETACHMENTS: [(&str, &str); 8] = [
    ("s", ""),
    ("ses", "s"),
    ("xes", "x"),
    ("zes", "z"),
    ("ches", "ch"),
    ("shes", "sh"),
    ("men", "man"),
    ("ies", "y"),
];

/// WordNet-backed provider.
///
/// Spaces become underscores. When the exact lemma is missing, the standard
/// noun suffix detachments are tried in order so plural surface forms are
/// found.
#[derive(Debug)]
pub struct WordNetProvider {
    id: String,
    index: NounIndex,
}

impl WordNetProvider {
    pub fn new(id: impl Into<String>, index: NounIndex) -> Self {
        WordNetProvider {
            id: id.into(),
            index,
        }
    }

    pub fn open(id: impl Into<String>, dir: impl AsRef<Path>) -> Result<Self, WndbError> {
        Ok(Self::new(id, NounIndex::load(dir)?))
    }

    pub fn index(&self) -> &NounIndex {
        &self.index
    }

    fn resolve(&self, word: &str) -> Option<String> {
        let key: String = word
            .trim()
            .to_lowercase()
            .split_whitespace()
            .collect::<Vec<_>>()
            .join("_");
        if self.index.contains(&key) {
            return Some(key);
        }
        NOUN_DETACHMENTS.iter().find_map(|(suffix, ending)| {
            let stem = key.strip_suffix(suffix)?;
            if stem.is_empty() {
                return None;
            }
            let base = format!("{stem}{ending}");
            self.index.contains(&base).then_some(base)
        })
    }
}

impl DefinitionSource for WordNetProvider {
    fn id(&self) -> &str {
        &self.id
    }

    fn lookup(&self, word: &str) -> Result<Option<DefinitionSet>, TransportError> {
        Ok(self.resolve(word).and_then(|key| {
            self.index.glosses(&key).map(|glosses| DefinitionSet {
                word: word.to_string(),
                provider_id: self.id.clone(),
                definitions: glosses.into_iter().map(str::to_string).collect(),
            })
        }))
    }
}
