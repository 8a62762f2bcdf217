mod common;

use std::path::Path;
use std::process::{Command, Output};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;
use std::time::Duration;

use common::fixture;
use lexgender::cache::DiskCache;
use lexgender::cli::classify_many;
use lexgender::error::{exit, Error};
use lexgender::html::Dialect;
use lexgender::http::{Fetch, FetchResponse, HostGate, HttpProvider};
use lexgender::providers::{bundled_providers, open_all, Provider, ProviderConfig};
use lexgender::snapshot::SnapshotEntry;
use lexgender_core::{
    default_lexicon, ClassifierParams, DefinitionSet, DefinitionSource, TransportError,
};
use serde_json::Value;

fn lexgender(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lexgender"))
        .args(args)
        .env_remove("LEXGENDER_CACHE_DIR")
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn classify_examples() {
    let v = json(&lexgender(&[
        "classify",
        "nun",
        "businessman",
        "--format",
        "json",
    ]));
    assert_eq!(v[0]["combined"], "fem");
    assert_eq!(v[0]["route"], "dictionary");
    assert_eq!(v[1]["combined"], "masc");
    assert_eq!(v[1]["route"], "suffix_heuristic");
}

#[test]
fn unknown_word_is_not_found_offline() {
    let out = lexgender(&["--offline", "classify", "qzxv", "--format", "tsv"]);
    assert_eq!(out.status.code(), Some(exit::SUCCESS));
    assert!(stdout(&out)
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("qzxv\tnot_found\tdictionary"));
}

#[test]
fn json_output_is_byte_identical_across_runs_and_job_counts() {
    let gold = fixture("../../data/gold.tsv");
    let args = |jobs: &'static str| {
        vec![
            "classify".to_string(),
            "--file".into(),
            path(&gold).into(),
            "--format".into(),
            "json".into(),
            "--jobs".into(),
            jobs.into(),
        ]
    };
    let run = |a: Vec<String>| {
        let a: Vec<&str> = a.iter().map(String::as_str).collect();
        lexgender(&a).stdout
    };
    let first = run(args("1"));
    assert!(!first.is_empty());
    assert_eq!(first, run(args("1")));
    assert_eq!(first, run(args("4")));

    let eval = || lexgender(&["evaluate", "--format", "json"]).stdout;
    assert_eq!(eval(), eval());
}

#[test]
fn evaluate_single_correct_entry() {
    let dir = tempfile::tempdir().unwrap();
    let gold = dir.path().join("one.tsv");
    std::fs::write(&gold, "nun\tfem\treligion\n").unwrap();
    let v = json(&lexgender(&[
        "evaluate",
        "--gold",
        path(&gold),
        "--format",
        "json",
    ]));
    assert_eq!(v["combined"]["accuracy"], 1.0);
    assert_eq!(v["combined"]["n"], 1);
}

#[test]
fn evaluate_writes_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.tsv");
    let out = lexgender(&[
        "evaluate",
        "--strict-repro",
        "--format",
        "tsv",
        "--output",
        path(&report),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&report).unwrap();
    assert!(text.starts_with("provider\tn\tprecision"), "{text}");
}

#[test]
fn exit_codes() {
    assert_eq!(lexgender(&["--help"]).status.code(), Some(exit::SUCCESS));
    assert_eq!(lexgender(&["--version"]).status.code(), Some(exit::SUCCESS));
    assert_eq!(lexgender(&[]).status.code(), Some(exit::USAGE));
    assert_eq!(lexgender(&["frobnicate"]).status.code(), Some(exit::USAGE));
    assert_eq!(lexgender(&["classify"]).status.code(), Some(exit::USAGE));
    assert_eq!(
        lexgender(&["-d", "0", "classify", "nun"]).status.code(),
        Some(exit::USAGE)
    );
    assert_eq!(
        lexgender(&["--dict", "oed", "classify", "nun"])
            .status
            .code(),
        Some(exit::USAGE)
    );
    assert_eq!(
        lexgender(&["evaluate", "--gold", "/no/such/gold.tsv"])
            .status
            .code(),
        Some(exit::USAGE)
    );

    let dir = tempfile::tempdir().unwrap();
    let bad_gold = dir.path().join("bad.tsv");
    std::fs::write(&bad_gold, "nun\tfemme\treligion\n").unwrap();
    assert_eq!(
        lexgender(&["evaluate", "--gold", path(&bad_gold)])
            .status
            .code(),
        Some(exit::DATA_FORMAT)
    );
    let bad_snap = dir.path().join("bad.json");
    std::fs::write(&bad_snap, "{\"provider\": 3}").unwrap();
    assert_eq!(
        lexgender(&["--snapshot", path(&bad_snap), "classify", "nun"])
            .status
            .code(),
        Some(exit::DATA_FORMAT)
    );
}

#[test]
fn offline_refuses_live_dictionaries_before_any_request() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let out = lexgender(&[
        "--offline",
        "--cache-root",
        path(&cache),
        "--dict",
        "mw",
        "classify",
        "nun",
    ]);
    assert_eq!(out.status.code(), Some(exit::USAGE));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--offline"));
    assert!(!cache.exists());

    let configs = [ProviderConfig::live(Dialect::MerriamWebster, &cache)];
    assert!(open_all(&configs, true).is_err());
}

struct Counting(Arc<AtomicUsize>);

impl Fetch for Counting {
    fn get(&self, _url: &str) -> Result<FetchResponse, String> {
        self.0.fetch_add(1, Ordering::SeqCst);
        Err("network disabled in tests".into())
    }
}

#[test]
fn warm_cache_serves_every_lookup_without_requests() {
    let dir = tempfile::tempdir().unwrap();
    let cache = DiskCache::new(dir.path());
    cache
        .put(
            "mw",
            "nun",
            &SnapshotEntry {
                found: true,
                definitions: vec!["a woman belonging to a religious order".into()],
            },
        )
        .unwrap();
    cache
        .put("mw", "qzxv", &SnapshotEntry::not_found())
        .unwrap();
    let calls = Arc::new(AtomicUsize::new(0));
    let provider = HttpProvider::new(
        "mw",
        Dialect::MerriamWebster,
        DiskCache::new(dir.path()),
        Box::new(Counting(calls.clone())),
        Duration::from_millis(1),
    )
    .with_gate(Arc::new(HostGate::default()));
    let providers: Vec<Provider> = vec![Box::new(provider)];
    let words = [
        "nun".to_string(),
        "qzxv".to_string(),
        "businessman".to_string(),
    ];
    let results = classify_many(
        &words,
        &providers,
        &ClassifierParams::DEFAULT,
        &default_lexicon(),
        2,
    )
    .unwrap();
    assert_eq!(results[0].combined, lexgender_core::GenderLabel::Fem);
    assert_eq!(results[1].combined, lexgender_core::GenderLabel::NotFound);
    assert_eq!(calls.load(Ordering::SeqCst), 0);

    // a cold word does reach the fetcher, and its failure is a transport error
    let err = classify_many(
        &["abbess".into()],
        &providers,
        &ClassifierParams::DEFAULT,
        &default_lexicon(),
        1,
    )
    .unwrap_err();
    assert_eq!(calls.load(Ordering::SeqCst), 1);
    assert_eq!(Error::from(err).exit_code(), exit::TRANSPORT);
}

struct Broken;

impl DefinitionSource for Broken {
    fn id(&self) -> &str {
        "broken"
    }
    fn lookup(&self, word: &str) -> Result<Option<DefinitionSet>, TransportError> {
        Err(TransportError::new("broken", word, "connection reset"))
    }
}

#[test]
fn jobs_preserve_order_and_propagate_errors() {
    let providers = bundled_providers().unwrap();
    let words: Vec<String> = ["nun", "monk", "man", "table", "queen", "king", "widow"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let lex = default_lexicon();
    let serial = classify_many(&words, &providers, &ClassifierParams::DEFAULT, &lex, 1).unwrap();
    let parallel = classify_many(&words, &providers, &ClassifierParams::DEFAULT, &lex, 3).unwrap();
    assert_eq!(serial, parallel);
    assert_eq!(
        serial.iter().map(|r| r.word.as_str()).collect::<Vec<_>>(),
        words
    );

    let broken: Vec<Provider> = vec![Box::new(Broken)];
    assert!(classify_many(&words, &broken, &ClassifierParams::DEFAULT, &lex, 3).is_err());
}

#[test]
fn grid_search_prints_table_and_argmax() {
    let out = lexgender(&[
        "--snapshot",
        path(&fixture("grid/wordnet20.json")),
        "grid-search",
        "--gold",
        path(&fixture("grid/gold20.tsv")),
        "--d-values",
        "2,3",
        "--t-values",
        "10",
        "--w-values",
        "5",
    ]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4, "{text}");
    assert_eq!(lines[0], "d\tt\tw\tcorrect\taccuracy");
    assert!(lines[3].starts_with("# best\td=2\tt=10\tw=5"), "{text}");
}

#[test]
fn corpus_report_json_and_malformed_input() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("t.tsv");
    std::fs::write(
        &corpus,
        "The\tDT\nman\tNN\nsaw\tVBD\nnuns\tNNS\nand\tCC\ntables\tNNS\n",
    )
    .unwrap();
    let v = json(&lexgender(&[
        "corpus-report",
        path(&corpus),
        "--format",
        "json",
    ]));
    assert_eq!(v["composition"]["total"]["all"], 3);
    assert_eq!(v["composition"]["masc"]["NN"], 1);

    std::fs::write(&corpus, "man\tNN\nnun NN\n").unwrap();
    assert_eq!(
        lexgender(&["corpus-report", path(&corpus)]).status.code(),
        Some(exit::DATA_FORMAT)
    );
}

#[test]
fn snapshot_capture_round_trips_through_classify() {
    let dir = tempfile::tempdir().unwrap();
    let snap = dir.path().join("mini.json");
    let wndb = format!("wordnet={}", path(&fixture("wndb_mini")));
    let out = lexgender(&[
        "--dict",
        &wndb,
        "snapshot",
        "nun",
        "crew",
        "qzxv",
        "--output",
        path(&snap),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).starts_with("wrote 3 entries from wordnet"));

    let live = json(&lexgender(&[
        "--dict", &wndb, "classify", "nun", "crew", "qzxv", "--format", "json",
    ]));
    let frozen = json(&lexgender(&[
        "--snapshot",
        path(&snap),
        "classify",
        "nun",
        "crew",
        "qzxv",
        "--format",
        "json",
    ]));
    assert_eq!(live, frozen);
}
