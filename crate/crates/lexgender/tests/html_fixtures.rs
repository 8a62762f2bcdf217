mod common;

use common::read_fixture;
use lexgender::html::{extract_definitions, Dialect, HtmlError};

#[test]
fn merriam_webster_nun() {
    let defs =
        extract_definitions(&read_fixture("html/mw_nun.html"), Dialect::MerriamWebster).unwrap();
    assert_eq!(
        defs,
        [
            "a woman belonging to a religious order",
            "any of various pigeons with a crest of feathers on the head",
            "the 14th letter of the Hebrew alphabet",
        ]
    );
}

#[test]
fn merriam_webster_skips_verb_entries_and_usage_notes() {
    let defs =
        extract_definitions(&read_fixture("html/mw_king.html"), Dialect::MerriamWebster).unwrap();
    assert_eq!(defs.len(), 6);
    assert_eq!(defs[1], "a paramount chief");
    assert_eq!(defs[5], "a checker that has been crowned");
    assert!(defs.iter().all(|d| !d.contains("to make king")));
}

#[test]
fn dictionary_com_widow() {
    let defs = extract_definitions(
        &read_fixture("html/dcom_widow.html"),
        Dialect::DictionaryCom,
    )
    .unwrap();
    assert_eq!(
        defs,
        [
            "a woman who has lost her husband by death and has not remarried.",
            "an additional hand or part of a hand, as one dealt to the table.",
            "a short last line of a paragraph.",
        ]
    );
}

#[test]
fn page_without_noun_senses() {
    let page = read_fixture("html/dcom_verb_only.html");
    assert_eq!(
        extract_definitions(&page, Dialect::DictionaryCom),
        Err(HtmlError::NoDefinitions)
    );
}

#[test]
fn dialects_do_not_cross_match() {
    let page = read_fixture("html/mw_nun.html");
    assert_eq!(
        extract_definitions(&page, Dialect::DictionaryCom),
        Err(HtmlError::NoDefinitions)
    );
}
