#![allow(dead_code)]

use std::path::PathBuf;

use lexgender::snapshot::SnapshotProvider;

pub fn fixture(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(rel)
}

pub fn read_fixture(rel: &str) -> String {
    std::fs::read_to_string(fixture(rel)).unwrap_or_else(|e| panic!("{rel}: {e}"))
}

pub fn snapshot(rel: &str) -> SnapshotProvider {
    SnapshotProvider::open(fixture(rel)).unwrap()
}
