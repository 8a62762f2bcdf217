use std::fs::{self, File};
use std::io::{BufRead, BufReader};
use std::path::Path;

use lexgender_core::corpus::{NounCollector, NounRecord};
use lexgender_core::eval::{parse_gold, GoldEntry};

use crate::error::Error;
use crate::providers::BUNDLED_GOLD;

pub fn load_gold(path: impl AsRef<Path>) -> Result<Vec<GoldEntry>, Error> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_gold(&text).map_err(|source| Error::Gold {
        path: path.to_path_buf(),
        source,
    })
}

/// The 134-row gold standard shipped with the crate.
pub fn bundled_gold() -> Vec<GoldEntry> {
    parse_gold(BUNDLED_GOLD).expect("bundled gold file is valid")
}

/// First tab-separated column of every non-blank, non-comment line. Reads
/// plain word lists and gold TSV files alike.
pub fn read_words(path: impl AsRef<Path>) -> Result<Vec<String>, Error> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    Ok(words_from_text(&text))
}

pub fn words_from_text(text: &str) -> Vec<String> {
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|l| l.split('\t').next().unwrap_or("").trim().to_string())
        .filter(|w| !w.is_empty())
        .collect()
}

/// Stream a `token<TAB>POS` corpus file into noun records.
pub fn load_tagged(path: impl AsRef<Path>) -> Result<Vec<NounRecord>, Error> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let mut collector = NounCollector::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::io(path, e))?;
        collector
            .push_line(i + 1, &line)
            .map_err(|source| Error::Corpus {
                path: path.to_path_buf(),
                source,
            })?;
    }
    Ok(collector.finish())
}
