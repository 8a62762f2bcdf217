//! Definition extraction from online dictionary entry pages.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use scraper::{ElementRef, Html, Selector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dialect {
    MerriamWebster,
    DictionaryCom,
}

impl Dialect {
    pub fn default_id(self) -> &'static str {
        match self {
            Dialect::MerriamWebster => "mw",
            Dialect::DictionaryCom => "dcom",
        }
    }

    pub fn entry_url(self, encoded_word: &str) -> String {
        match self {
            Dialect::MerriamWebster => {
                format!("https://www.merriam-webster.com/dictionary/{encoded_word}")
            }
            Dialect::DictionaryCom => format!("https://www.dictionary.com/browse/{encoded_word}"),
        }
    }

    pub fn rules(self) -> &'static DialectRules {
        &RULES
            .iter()
            .find(|(d, _)| *d == self)
            .expect("every dialect has rules")
            .1
    }
}

impl fmt::Display for Dialect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.default_id())
    }
}

impl FromStr for Dialect {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "mw" | "merriam-webster" => Ok(Dialect::MerriamWebster),
            "dcom" | "dictionary.com" => Ok(Dialect::DictionaryCom),
            other => Err(format!(
                "unknown dictionary dialect {other:?} (expected mw or dcom)"
            )),
        }
    }
}

/// CSS selectors locating definitions on one site's entry pages.
#[derive(Debug)]
pub struct DialectRules {
    /// One element per headword entry (a page may hold noun and verb entries).
    pub entry: &'static str,
    /// Part-of-speech label inside an entry.
    pub part_of_speech: &'static str,
    /// One element per sense definition, in page order.
    pub definition: &'static str,
    /// Subtrees inside a definition that are not definition text.
    pub exclude: &'static str,
}

// Site markup changes only need edits here.
static RULES: [(Dialect, DialectRules); 2] = [
    (
        Dialect::MerriamWebster,
        DialectRules {
            entry: "div.entry-word-section-container",
            part_of_speech: "h2.parts-of-speech",
            definition: "span.dtText",
            exclude: "span.ex-sent, span.wi, span.uns, .vis-w",
        },
    ),
    (
        Dialect::DictionaryCom,
        DialectRules {
            entry: "section[data-type=\"word-definitions\"]",
            part_of_speech: ".luna-pos",
            definition: "div[data-type=\"word-definition-content\"]",
            exclude: ".luna-example, .luna-label",
        },
    ),
];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HtmlError {
    #[error("empty or unparseable page")]
    Malformed,
    #[error("no noun definitions on page")]
    NoDefinitions,
}

fn selector(css: &str) -> Selector {
    Selector::parse(css).unwrap_or_else(|e| panic!("bad built-in selector {css:?}: {e:?}"))
}

fn collapse(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn visible_text(element: ElementRef<'_>, exclude: &Selector) -> String {
    let skipped: HashSet<_> = element.select(exclude).map(|e| e.id()).collect();
    let mut out = String::new();
    for node in element.descendants() {
        let Some(text) = node.value().as_text() else {
            continue;
        };
        if node.ancestors().any(|a| skipped.contains(&a.id())) {
            continue;
        }
        out.push_str(text);
        out.push(' ');
    }
    collapse(&out)
}

fn is_noun_label(label: &str) -> bool {
    label
        .split(|c: char| !c.is_alphabetic())
        .any(|w| w.eq_ignore_ascii_case("noun"))
}

/// Sense definitions of the noun entries on `html`, markup stripped, in page
/// order. Entries without a part-of-speech label are kept.
pub fn extract_definitions(html: &str, dialect: Dialect) -> Result<Vec<String>, HtmlError> {
    if html.trim().is_empty() {
        return Err(HtmlError::Malformed);
    }
    let doc = Html::parse_document(html);
    let rules = dialect.rules();
    let (entry, pos, definition, exclude) = (
        selector(rules.entry),
        selector(rules.part_of_speech),
        selector(rules.definition),
        selector(rules.exclude),
    );
    let mut definitions = Vec::new();
    for entry in doc.select(&entry) {
        if let Some(label) = entry.select(&pos).next() {
            if !is_noun_label(&label.text().collect::<String>()) {
                continue;
            }
        }
        for def in entry.select(&definition) {
            let text = visible_text(def, &exclude);
            let text = text.trim_start_matches(|c: char| c == ':' || c.is_whitespace());
            if !text.is_empty() {
                definitions.push(text.to_string());
            }
        }
    }
    if definitions.is_empty() {
        Err(HtmlError::NoDefinitions)
    } else {
        Ok(definitions)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_selectors_parse() {
        for (d, rules) in &RULES {
            for css in [
                rules.entry,
                rules.part_of_speech,
                rules.definition,
                rules.exclude,
            ] {
                assert!(Selector::parse(css).is_ok(), "{d}: {css}");
            }
        }
    }

    #[test]
    fn empty_page_is_an_error() {
        assert_eq!(
            extract_definitions("", Dialect::MerriamWebster),
            Err(HtmlError::Malformed)
        );
        assert_eq!(
            extract_definitions("  \n", Dialect::DictionaryCom),
            Err(HtmlError::Malformed)
        );
    }

    #[test]
    fn page_without_entries_has_no_definitions() {
        let page = "<html><body><h1>Words fail us</h1></body></html>";
        assert_eq!(
            extract_definitions(page, Dialect::MerriamWebster),
            Err(HtmlError::NoDefinitions)
        );
    }

    #[test]
    fn noun_label_detection() {
        assert!(is_noun_label("noun"));
        assert!(is_noun_label("plural noun"));
        assert!(is_noun_label("noun (1)"));
        assert!(!is_noun_label("pronoun"));
        assert!(!is_noun_label("verb"));
    }

    #[test]
    fn dialect_names() {
        assert_eq!("mw".parse::<Dialect>(), Ok(Dialect::MerriamWebster));
        assert_eq!("dcom".parse::<Dialect>(), Ok(Dialect::DictionaryCom));
        assert!("oed".parse::<Dialect>().is_err());
        assert_eq!(
            Dialect::DictionaryCom.entry_url("nun"),
            "https://www.dictionary.com/browse/nun"
        );
    }
}
