//! Lexical gender detection from dictionary definitions.
//!
//! A noun is labelled by counting definitively gendered seed words
//! (woman/man, female/male, ...) in the first few definitions each
//! dictionary gives for it, then fusing the per-dictionary labels by
//! majority vote. Seed forms and `-man`/`-woman`/`-boy`/`-girl` compounds
//! are decided before any dictionary is consulted.
//!
//! This crate is `no_std` (it needs `alloc`). Dictionary access goes through
//! the [`DefinitionSource`] trait; file formats, HTTP providers and the CLI
//! live in the `lexgender` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod classify;
pub mod corpus;
pub mod eval;
pub mod grid;
pub mod label;
pub mod lexicon;
pub mod params;
pub mod source;
pub mod vote;

pub use classify::{
    classify, classify_with_provider, count_gendered, seed_shortcut, suffix_heuristic, tokenize,
    ClassificationResult, ClassifyError, GenderCounts, ProviderVerdict, Route,
};
pub use eval::{evaluate, parse_gold, EvalReport, GoldEntry, Metrics};
pub use grid::{grid_search, GridReport};
pub use label::{Gender, GenderLabel};
pub use lexicon::{default_lexicon, SeedLexicon, SeedPair};
pub use params::{ClassifierParams, GridRanges};
pub use source::{DefinitionSet, DefinitionSource, TransportError};
pub use vote::combine;
