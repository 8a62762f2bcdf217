//! Provider configuration and construction.

use std::collections::BTreeSet;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Duration;

use lexgender_core::DefinitionSource;

use crate::cache::DiskCache;
use crate::error::Error;
use crate::html::Dialect;
use crate::http::{Fetch, HttpProvider, ReqwestFetcher, DEFAULT_MIN_INTERVAL};
use crate::snapshot::{Snapshot, SnapshotProvider};
use crate::wndb::WordNetProvider;

pub type Provider = Box<dyn DefinitionSource + Send + Sync>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProviderMode {
    WordnetDb,
    HttpLive(Dialect),
    Snapshot,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProviderConfig {
    pub provider_id: String,
    pub mode: ProviderMode,
    /// WNDB directory, cache root or snapshot file depending on `mode`.
    pub data_path: PathBuf,
    pub min_request_interval: Duration,
}

impl ProviderConfig {
    pub fn wordnet(dir: impl Into<PathBuf>) -> Self {
        ProviderConfig {
            provider_id: "wordnet".into(),
            mode: ProviderMode::WordnetDb,
            data_path: dir.into(),
            min_request_interval: Duration::ZERO,
        }
    }

    /// Snapshot providers take their id from the file unless one is given.
    pub fn snapshot(path: impl Into<PathBuf>) -> Self {
        ProviderConfig {
            provider_id: String::new(),
            mode: ProviderMode::Snapshot,
            data_path: path.into(),
            min_request_interval: Duration::ZERO,
        }
    }

    pub fn live(dialect: Dialect, cache_root: impl Into<PathBuf>) -> Self {
        ProviderConfig {
            provider_id: dialect.default_id().into(),
            mode: ProviderMode::HttpLive(dialect),
            data_path: cache_root.into(),
            min_request_interval: DEFAULT_MIN_INTERVAL,
        }
    }

    pub fn is_live(&self) -> bool {
        matches!(self.mode, ProviderMode::HttpLive(_))
    }

    pub fn open(&self) -> Result<Provider, Error> {
        self.open_with(|| {
            ReqwestFetcher::new()
                .map(|f| Box::new(f) as Box<dyn Fetch>)
                .map_err(Error::Usage)
        })
    }

    /// Like [`open`](Self::open) with a caller-supplied HTTP client for live
    /// providers.
    pub fn open_with(
        &self,
        fetcher: impl FnOnce() -> Result<Box<dyn Fetch>, Error>,
    ) -> Result<Provider, Error> {
        Ok(match &self.mode {
            ProviderMode::WordnetDb => Box::new(WordNetProvider::open(
                self.provider_id.clone(),
                &self.data_path,
            )?),
            ProviderMode::Snapshot => {
                let mut snapshot = Snapshot::read(&self.data_path)?;
                if !self.provider_id.is_empty() {
                    snapshot.provider = self.provider_id.clone();
                }
                Box::new(SnapshotProvider::new(snapshot))
            }
            ProviderMode::HttpLive(dialect) => {
                if self.min_request_interval.is_zero() {
                    return Err(Error::Usage(format!(
                        "{}: live providers need a positive request interval",
                        self.provider_id
                    )));
                }
                Box::new(HttpProvider::new(
                    self.provider_id.clone(),
                    *dialect,
                    DiskCache::new(&self.data_path),
                    fetcher()?,
                    self.min_request_interval,
                ))
            }
        })
    }
}

/// One `--dict` argument: `wordnet=DIR`, `snapshot=FILE`, `mw` or `dcom`,
/// optionally prefixed with `ID:` to rename the provider.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DictSpec {
    pub id: Option<String>,
    pub kind: DictKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DictKind {
    Wordnet(PathBuf),
    Snapshot(PathBuf),
    Live(Dialect),
}

impl FromStr for DictSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (id, rest) = match s.split_once(':') {
            Some((id, rest)) if !id.contains('=') && !id.is_empty() => (Some(id.to_string()), rest),
            _ => (None, s),
        };
        let kind = match rest.split_once('=') {
            Some(("wordnet", dir)) => DictKind::Wordnet(dir.into()),
            Some(("snapshot", file)) => DictKind::Snapshot(file.into()),
            Some((other, _)) => return Err(format!("unknown dictionary kind {other:?}")),
            None => DictKind::Live(rest.parse()?),
        };
        Ok(DictSpec { id, kind })
    }
}

impl fmt::Display for DictSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(id) = &self.id {
            write!(f, "{id}:")?;
        }
        match &self.kind {
            DictKind::Wordnet(p) => write!(f, "wordnet={}", p.display()),
            DictKind::Snapshot(p) => write!(f, "snapshot={}", p.display()),
            DictKind::Live(d) => write!(f, "{d}"),
        }
    }
}

impl DictSpec {
    pub fn into_config(
        self,
        cache_root: &std::path::Path,
        min_interval: Duration,
    ) -> ProviderConfig {
        let mut config = match self.kind {
            DictKind::Wordnet(dir) => ProviderConfig::wordnet(dir),
            DictKind::Snapshot(file) => ProviderConfig::snapshot(file),
            DictKind::Live(dialect) => {
                let mut c = ProviderConfig::live(dialect, cache_root);
                c.min_request_interval = min_interval;
                c
            }
        };
        if let Some(id) = self.id {
            config.provider_id = id;
        }
        config
    }
}

/// `--offline` forbids live providers; checked before anything is opened.
pub fn reject_live(configs: &[ProviderConfig]) -> Result<(), Error> {
    match configs.iter().find(|c| c.is_live()) {
        Some(live) => Err(Error::Usage(format!(
            "--offline forbids live provider {:?}",
            live.provider_id
        ))),
        None => Ok(()),
    }
}

/// At least one provider, ids unique.
pub fn validate(providers: &[Provider]) -> Result<(), Error> {
    if providers.is_empty() {
        return Err(Error::Usage("at least one dictionary is required".into()));
    }
    let mut seen = BTreeSet::new();
    for p in providers {
        if !seen.insert(p.id().to_string()) {
            return Err(Error::Usage(format!("duplicate provider id {:?}", p.id())));
        }
    }
    Ok(())
}

pub fn open_all(configs: &[ProviderConfig], offline: bool) -> Result<Vec<Provider>, Error> {
    if offline {
        reject_live(configs)?;
    }
    let providers = configs
        .iter()
        .map(ProviderConfig::open)
        .collect::<Result<Vec<_>, _>>()?;
    validate(&providers)?;
    Ok(providers)
}

/// Snapshots compiled into the binary, used when no dictionary is configured.
pub const BUNDLED_SNAPSHOTS: &[(&str, &str)] = &[(
    "wordnet.json",
    include_str!("../data/snapshots/wordnet.json"),
)];

pub fn bundled_providers() -> Result<Vec<Provider>, Error> {
    BUNDLED_SNAPSHOTS
        .iter()
        .map(|(name, text)| {
            Snapshot::from_json(text)
                .map(|s| Box::new(SnapshotProvider::new(s)) as Provider)
                .map_err(|e| Error::json(std::path::Path::new(name), e))
        })
        .collect()
}

pub const BUNDLED_GOLD: &str = include_str!("../data/gold.tsv");
