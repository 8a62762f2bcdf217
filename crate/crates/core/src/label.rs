use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};

/// Outcome of lexical gender detection for one word.
///
/// `NotFound` only ever comes from a failed dictionary lookup. Counting seed
/// words always yields one of the other three.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenderLabel {
    Masc,
    Fem,
    Neut,
    NotFound,
}

impl GenderLabel {
    pub const ALL: [GenderLabel; 4] = [
        GenderLabel::Masc,
        GenderLabel::Fem,
        GenderLabel::Neut,
        GenderLabel::NotFound,
    ];

    /// The three labels a gold annotation can carry.
    pub const GOLD: [GenderLabel; 3] = [GenderLabel::Masc, GenderLabel::Fem, GenderLabel::Neut];

    pub fn as_str(self) -> &'static str {
        match self {
            GenderLabel::Masc => "masc",
            GenderLabel::Fem => "fem",
            GenderLabel::Neut => "neut",
            GenderLabel::NotFound => "not_found",
        }
    }

    pub fn is_gendered(self) -> bool {
        matches!(self, GenderLabel::Masc | GenderLabel::Fem)
    }

    pub(crate) fn index(self) -> usize {
        match self {
            GenderLabel::Masc => 0,
            GenderLabel::Fem => 1,
            GenderLabel::Neut => 2,
            GenderLabel::NotFound => 3,
        }
    }
}

impl fmt::Display for GenderLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown gender label {0:?} (expected masc, fem, neut or not_found)")]
pub struct ParseLabelError(pub alloc::string::String);

impl FromStr for GenderLabel {
    type Err = ParseLabelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "masc" => Ok(GenderLabel::Masc),
            "fem" => Ok(GenderLabel::Fem),
            "neut" => Ok(GenderLabel::Neut),
            "not_found" | "not found" => Ok(GenderLabel::NotFound),
            other => Err(ParseLabelError(other.into())),
        }
    }
}

/// Gender of a seed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gender {
    Masculine,
    Feminine,
}

impl From<Gender> for GenderLabel {
    fn from(g: Gender) -> Self {
        match g {
            Gender::Masculine => GenderLabel::Masc,
            Gender::Feminine => GenderLabel::Fem,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_agree() {
        for label in GenderLabel::ALL {
            assert_eq!(label.as_str().parse::<GenderLabel>().unwrap(), label);
        }
        assert_eq!(
            "not found".parse::<GenderLabel>().unwrap(),
            GenderLabel::NotFound
        );
        assert!("male".parse::<GenderLabel>().is_err());
    }

    #[test]
    fn serde_uses_snake_case_names() {
        assert_eq!(
            serde_json::to_string(&GenderLabel::NotFound).unwrap(),
            "\"not_found\""
        );
        let back: GenderLabel = serde_json::from_str("\"masc\"").unwrap();
        assert_eq!(back, GenderLabel::Masc);
    }
}
