use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use percent_encoding::{utf8_percent_encode, NON_ALPHANUMERIC};

use crate::error::Error;
use crate::snapshot::SnapshotEntry;

/// Replace `path` with `bytes` via a temp file in the same directory, so
/// readers see either the old or the new contents, never a torn write.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), Error> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| Error::io(dir, e))?;
    tmp.write_all(bytes).map_err(|e| Error::io(path, e))?;
    tmp.as_file().sync_all().map_err(|e| Error::io(path, e))?;
    tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
    Ok(())
}

/// `<root>/<provider_id>/<percent-encoded word>.json`, one snapshot entry
/// per file.
#[derive(Debug, Clone)]
pub struct DiskCache {
    root: PathBuf,
}

impl DiskCache {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        DiskCache { root: root.into() }
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn entry_path(&self, provider_id: &str, word: &str) -> PathBuf {
        let name = utf8_percent_encode(word, NON_ALPHANUMERIC).to_string();
        self.root.join(provider_id).join(format!("{name}.json"))
    }

    pub fn get(&self, provider_id: &str, word: &str) -> Result<Option<SnapshotEntry>, Error> {
        let path = self.entry_path(provider_id, word);
        match fs::read_to_string(&path) {
            Ok(text) => serde_json::from_str(&text)
                .map(Some)
                .map_err(|e| Error::json(&path, e)),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(Error::io(&path, e)),
        }
    }

    pub fn put(&self, provider_id: &str, word: &str, entry: &SnapshotEntry) -> Result<(), Error> {
        let path = self.entry_path(provider_id, word);
        let text = serde_json::to_string_pretty(entry).expect("entry serializes");
        write_atomic(&path, text.as_bytes())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_and_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::new(dir.path());
        let path = cache.entry_path("mw", "single person");
        assert_eq!(path, dir.path().join("mw").join("single%20person.json"));
        assert_eq!(
            cache.entry_path("mw", "mr.").file_name().unwrap(),
            "mr%2E.json"
        );

        assert_eq!(cache.get("mw", "nun").unwrap(), None);
        let entry = SnapshotEntry {
            found: true,
            definitions: vec!["a woman belonging to a religious order".into()],
        };
        cache.put("mw", "nun", &entry).unwrap();
        assert_eq!(cache.get("mw", "nun").unwrap(), Some(entry));
        // no stray temp files left behind
        assert_eq!(fs::read_dir(dir.path().join("mw")).unwrap().count(), 1);
    }

    #[test]
    fn corrupt_entry_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::new(dir.path());
        fs::create_dir_all(dir.path().join("mw")).unwrap();
        fs::write(cache.entry_path("mw", "nun"), "{not json").unwrap();
        assert!(cache.get("mw", "nun").is_err());
    }
}
