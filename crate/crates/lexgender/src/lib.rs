//! Dictionary providers, file formats and the command-line front end for
//! `lexgender-core`.
//!
//! Providers: a WordNet database reader ([`wndb`]), frozen JSON snapshots
//! ([`snapshot`]) and cached, rate-limited online dictionaries ([`http`],
//! [`html`]).

pub mod cache;
pub mod cli;
pub mod error;
pub mod files;
pub mod html;
pub mod http;
pub mod providers;
pub mod report;
pub mod snapshot;
pub mod wndb;

pub use error::Error;
pub use providers::{Provider, ProviderConfig, ProviderMode};
pub use snapshot::{Snapshot, SnapshotEntry, SnapshotProvider};
pub use wndb::{NounIndex, WordNetProvider};
