//! The eight definitively gendered seed pairs and their plural forms.

use alloc::collections::BTreeMap;

use crate::label::Gender;

/// One feminine/masculine pair, ranked by how commonly it marks gender in
/// dictionary definitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeedPair {
    pub rank: u8,
    pub feminine: &'static str,
    pub masculine: &'static str,
}

impl SeedPair {
    pub fn form(&self, gender: Gender) -> &'static str {
        match gender {
            Gender::Feminine => self.feminine,
            Gender::Masculine => self.masculine,
        }
    }
}

pub const SEED_PAIR_COUNT: usize = 8;

const PAIRS: [SeedPair; SEED_PAIR_COUNT] = [
    SeedPair {
        rank: 1,
        feminine: "woman",
        masculine: "man",
    },
    SeedPair {
        rank: 2,
        feminine: "female",
        masculine: "male",
    },
    SeedPair {
        rank: 3,
        feminine: "wife",
        masculine: "husband",
    },
    SeedPair {
        rank: 4,
        feminine: "daughter",
        masculine: "son",
    },
    SeedPair {
        rank: 5,
        feminine: "mother",
        masculine: "father",
    },
    SeedPair {
        rank: 6,
        feminine: "girl",
        masculine: "boy",
    },
    SeedPair {
        rank: 7,
        feminine: "sister",
        masculine: "brother",
    },
    SeedPair {
        rank: 8,
        feminine: "aunt",
        masculine: "uncle",
    },
];

// Closed set with irregular members, so no suffix rules.
const PLURALS: [(&str, &str); 2 * SEED_PAIR_COUNT] = [
    ("woman", "women"),
    ("man", "men"),
    ("female", "females"),
    ("male", "males"),
    ("wife", "wives"),
    ("husband", "husbands"),
    ("daughter", "daughters"),
    ("son", "sons"),
    ("mother", "mothers"),
    ("father", "fathers"),
    ("girl", "girls"),
    ("boy", "boys"),
    ("sister", "sisters"),
    ("brother", "brothers"),
    ("aunt", "aunts"),
    ("uncle", "uncles"),
];

/// Ordered seed pairs plus the plural of every seed form. Stores lowercase
/// forms only; callers lowercase before matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedLexicon {
    pairs: [SeedPair; SEED_PAIR_COUNT],
    plurals: BTreeMap<&'static str, &'static str>,
}

/// The standard lexicon: (woman, man), (female, male), (wife, husband),
/// (daughter, son), (mother, father), (girl, boy), (sister, brother),
/// (aunt, uncle).
pub fn default_lexicon() -> SeedLexicon {
    SeedLexicon {
        pairs: PAIRS,
        plurals: PLURALS.iter().copied().collect(),
    }
}

impl Default for SeedLexicon {
    fn default() -> Self {
        default_lexicon()
    }
}

impl SeedLexicon {
    pub fn pairs(&self) -> &[SeedPair] {
        &self.pairs
    }

    /// The first `w` pairs in rank order.
    pub fn truncated(&self, w: usize) -> &[SeedPair] {
        &self.pairs[..w.min(SEED_PAIR_COUNT)]
    }

    pub fn plural(&self, form: &str) -> Option<&'static str> {
        self.plurals.get(form).copied()
    }

    pub fn plurals(&self) -> &BTreeMap<&'static str, &'static str> {
        &self.plurals
    }

    /// Gender of `word` if it is a seed form or the plural of one, looking at
    /// the first `w` pairs.
    pub fn gender_within(&self, word: &str, w: usize) -> Option<Gender> {
        self.truncated(w).iter().find_map(|pair| {
            [Gender::Feminine, Gender::Masculine]
                .into_iter()
                .find(|&g| {
                    let form = pair.form(g);
                    word == form || self.plural(form) == Some(word)
                })
        })
    }

    /// Gender of `word` across all pairs.
    pub fn gender_of(&self, word: &str) -> Option<Gender> {
        self.gender_within(word, SEED_PAIR_COUNT)
    }

    /// Lookup table from every form (singular and plural) of the first `w`
    /// pairs to its gender.
    pub fn matcher(&self, w: usize) -> SeedMatcher {
        let mut forms = BTreeMap::new();
        for pair in self.truncated(w) {
            for g in [Gender::Feminine, Gender::Masculine] {
                let form = pair.form(g);
                forms.insert(form, g);
                if let Some(plural) = self.plural(form) {
                    forms.insert(plural, g);
                }
            }
        }
        SeedMatcher { forms }
    }
}

/// Precomputed token → gender table for a truncated lexicon.
#[derive(Debug, Clone)]
pub struct SeedMatcher {
    forms: BTreeMap<&'static str, Gender>,
}

impl SeedMatcher {
    pub fn gender(&self, token: &str) -> Option<Gender> {
        self.forms.get(token).copied()
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }
}
