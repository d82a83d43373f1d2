//! Reaction corpus: tab-separated `reaction`, `expected classification`,
//! optional `label`. `#` starts a comment line.

use reactopo_core::reaction::{parse, Classification, Reaction};
use reactopo_core::registry::Registry;

use crate::error::LoadError;

pub const BUNDLED_CORPUS: &str = include_str!("../data/reactions.tsv");

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub line: usize,
    pub label: String,
    pub text: String,
    pub reaction: Reaction,
    pub expected: Classification,
}

pub fn parse_corpus(
    text: &str,
    registry: &Registry,
    source_name: &str,
) -> Result<Vec<CorpusEntry>, LoadError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        if !(2..=3).contains(&cols.len()) {
            return Err(LoadError::at(
                source_name,
                lineno,
                format!(
                    "expected 2 or 3 tab-separated columns, found {}",
                    cols.len()
                ),
            ));
        }
        let reaction =
            parse(cols[0], registry).map_err(|e| LoadError::at(source_name, lineno, e))?;
        let expected = cols[1]
            .trim()
            .parse::<Classification>()
            .map_err(|e| LoadError::at(source_name, lineno, e))?;
        out.push(CorpusEntry {
            line: lineno,
            label: cols
                .get(2)
                .map_or_else(|| format!("line-{lineno}"), |s| s.trim().to_owned()),
            text: cols[0].trim().to_owned(),
            reaction,
            expected,
        });
    }
    Ok(out)
}

pub fn bundled_corpus(registry: &Registry) -> Vec<CorpusEntry> {
    parse_corpus(BUNDLED_CORPUS, registry, "reactions.tsv").expect("bundled corpus parses")
}
