use std::collections::BTreeMap;

use lexgender::snapshot::{capture, Snapshot, SnapshotEntry, SnapshotProvider};
use lexgender_core::source::StaticSource;
use lexgender_core::DefinitionSource;
use proptest::prelude::*;

fn entry() -> impl Strategy<Value = SnapshotEntry> {
    prop_oneof![
        Just(SnapshotEntry::not_found()),
        prop::collection::vec("[ -~]{0,40}", 1..6).prop_map(|definitions| SnapshotEntry {
            found: true,
            definitions,
        }),
    ]
}

fn snapshot() -> impl Strategy<Value = Snapshot> {
    (
        "[a-z]{1,8}",
        prop::collection::btree_map("[a-z' -]{1,12}", entry(), 0..20),
    )
        .prop_map(|(provider, entries)| Snapshot {
            provider,
            captured_at: "2026-01-01T00:00:00Z".into(),
            entries,
        })
}

proptest! {
    #[test]
    fn json_round_trip(snap in snapshot()) {
        let text = snap.to_json();
        let back = Snapshot::from_json(&text).unwrap();
        prop_assert_eq!(&back, &snap);
        prop_assert_eq!(back.to_json(), text);
    }

    #[test]
    fn file_round_trip_serves_same_lookups(snap in snapshot()) {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s.json");
        snap.write(&path).unwrap();
        let provider = SnapshotProvider::open(&path).unwrap();
        for (word, entry) in &snap.entries {
            let got = provider.lookup(word).unwrap();
            prop_assert_eq!(got, entry.clone().into_lookup(word, &snap.provider));
        }
    }
}

#[test]
fn capture_then_replay_matches_source() {
    let source = StaticSource::new("toy")
        .with("nun", ["a woman in a convent"])
        .with("mr", ["a title for a man"]);
    let words: Vec<String> = ["nun", "queen", "mr."]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let snap = capture(&source, &words, "2026-10-14T00:00:00Z".into()).unwrap();
    let replay = SnapshotProvider::new(snap.clone());
    for w in ["nun", "queen", "mr"] {
        assert_eq!(replay.lookup(w).unwrap(), source.lookup(w).unwrap(), "{w}");
    }
    let expected: BTreeMap<_, _> = [
        ("mr".to_string(), true),
        ("mr.".to_string(), false),
        ("nun".to_string(), true),
        ("queen".to_string(), false),
    ]
    .into_iter()
    .collect();
    let found: BTreeMap<_, _> = snap
        .entries
        .iter()
        .map(|(w, e)| (w.clone(), e.found))
        .collect();
    assert_eq!(found, expected);
}
