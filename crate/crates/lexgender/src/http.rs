//! Live online-dictionary provider backed by an on-disk cache.

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex, OnceLock};
use std::time::{Duration, Instant};

use lexgender_core::{DefinitionSet, DefinitionSource, TransportError};
use percent_encoding::{utf8_percent_encode, NON_ALPHANUMERIC};

use crate::cache::DiskCache;
use crate::html::{extract_definitions, Dialect, HtmlError};
use crate::snapshot::SnapshotEntry;

pub const DEFAULT_MIN_INTERVAL: Duration = Duration::from_secs(1);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FetchResponse {
    pub status: u16,
    pub body: String,
}

/// Plain HTTP GET. Split out so tests can count and fake requests.
pub trait Fetch: Send + Sync {
    fn get(&self, url: &str) -> Result<FetchResponse, String>;
}

pub struct ReqwestFetcher {
    client: reqwest::blocking::Client,
}

impl ReqwestFetcher {
    pub fn new() -> Result<Self, String> {
        let client = reqwest::blocking::Client::builder()
            .user_agent(concat!("lexgender/", env!("CARGO_PKG_VERSION")))
            .timeout(Duration::from_secs(30))
            .build()
            .map_err(|e| e.to_string())?;
        Ok(ReqwestFetcher { client })
    }
}

impl Fetch for ReqwestFetcher {
    fn get(&self, url: &str) -> Result<FetchResponse, String> {
        let response = self.client.get(url).send().map_err(|e| e.to_string())?;
        let status = response.status().as_u16();
        let body = response.text().map_err(|e| e.to_string())?;
        Ok(FetchResponse { status, body })
    }
}

/// Time of the last request to one host. Holding the lock serializes
/// requests to that host.
#[derive(Debug, Default)]
pub struct HostGate {
    last_request: Mutex<Option<Instant>>,
}

impl HostGate {
    /// Process-wide gate for `host`, shared by every provider talking to it.
    pub fn for_host(host: &str) -> Arc<HostGate> {
        static GATES: OnceLock<Mutex<HashMap<String, Arc<HostGate>>>> = OnceLock::new();
        let gates = GATES.get_or_init(Default::default);
        let mut gates = gates.lock().unwrap_or_else(|p| p.into_inner());
        gates.entry(host.to_string()).or_default().clone()
    }
}

fn host_of(url: &str) -> &str {
    let rest = url.split_once("://").map_or(url, |(_, r)| r);
    rest.split('/').next().unwrap_or(rest)
}

pub struct HttpProvider {
    id: String,
    dialect: Dialect,
    cache: DiskCache,
    fetcher: Box<dyn Fetch>,
    gate: Arc<HostGate>,
    min_interval: Duration,
    requests: AtomicUsize,
}

impl HttpProvider {
    pub fn new(
        id: impl Into<String>,
        dialect: Dialect,
        cache: DiskCache,
        fetcher: Box<dyn Fetch>,
        min_interval: Duration,
    ) -> Self {
        let gate = HostGate::for_host(host_of(&dialect.entry_url("")));
        HttpProvider {
            id: id.into(),
            dialect,
            cache,
            fetcher,
            gate,
            min_interval,
            requests: AtomicUsize::new(0),
        }
    }

    /// Use a private gate instead of the shared per-host one.
    pub fn with_gate(mut self, gate: Arc<HostGate>) -> Self {
        self.gate = gate;
        self
    }

    /// Network requests issued so far.
    pub fn request_count(&self) -> usize {
        self.requests.load(Ordering::SeqCst)
    }

    fn fetch_entry(&self, word: &str) -> Result<SnapshotEntry, TransportError> {
        let url = self
            .dialect
            .entry_url(&utf8_percent_encode(word, NON_ALPHANUMERIC).to_string());
        let transport = |msg: String| TransportError::new(&self.id, word, msg);
        self.requests.fetch_add(1, Ordering::SeqCst);
        let response = self.fetcher.get(&url).map_err(transport)?;
        match response.status {
            200 => match extract_definitions(&response.body, self.dialect) {
                Ok(definitions) => Ok(SnapshotEntry {
                    found: true,
                    definitions,
                }),
                Err(HtmlError::NoDefinitions) => Ok(SnapshotEntry::not_found()),
                Err(e) => Err(transport(format!("{url}: {e}"))),
            },
            404 => Ok(SnapshotEntry::not_found()),
            status => Err(transport(format!("{url}: HTTP {status}"))),
        }
    }
}

impl DefinitionSource for HttpProvider {
    fn id(&self) -> &str {
        &self.id
    }

    fn lookup(&self, word: &str) -> Result<Option<DefinitionSet>, TransportError> {
        let cache_err = |e: crate::error::Error| TransportError::new(&self.id, word, e.to_string());
        if let Some(entry) = self.cache.get(&self.id, word).map_err(cache_err)? {
            return Ok(entry.into_lookup(word, &self.id));
        }
        let mut last = self
            .gate
            .last_request
            .lock()
            .unwrap_or_else(|p| p.into_inner());
        // another caller may have fetched it while we waited
        if let Some(entry) = self.cache.get(&self.id, word).map_err(cache_err)? {
            return Ok(entry.into_lookup(word, &self.id));
        }
        if let Some(at) = *last {
            let elapsed = at.elapsed();
            if elapsed < self.min_interval {
                std::thread::sleep(self.min_interval - elapsed);
            }
        }
        let result = self.fetch_entry(word);
        *last = Some(Instant::now());
        let entry = result?;
        // written before the gate is released so waiters see it on re-check
        self.cache.put(&self.id, word, &entry).map_err(cache_err)?;
        drop(last);
        Ok(entry.into_lookup(word, &self.id))
    }

    fn is_deterministic(&self) -> bool {
        false
    }
}
