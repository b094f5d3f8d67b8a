//! The registry of literature facts consumed by the steps.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub const FACTS_TSV: &str = include_str!("facts.tsv");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fact {
    pub id: String,
    pub statement: String,
    pub citation: String,
}

/// One entry per line, tab-separated id, statement, citation; ids unique.
pub fn parse_registry(text: &str) -> Result<Vec<Fact>> {
    let mut out: Vec<Fact> = Vec::new();
    for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let f: Vec<&str> = line.split('\t').collect();
        if f.len() != 3 || f.iter().any(|x| x.trim().is_empty()) {
            return Err(Error::Parse { line: i + 1, reason: String::from("expected id<TAB>statement<TAB>citation") });
        }
        if out.iter().any(|x| x.id == f[0]) {
            return Err(Error::Parse { line: i + 1, reason: alloc::format!("duplicate fact id {}", f[0]) });
        }
        out.push(Fact { id: f[0].into(), statement: f[1].into(), citation: f[2].into() });
    }
    Ok(out)
}

pub fn registry() -> Vec<Fact> {
    parse_registry(FACTS_TSV).expect("bundled registry parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_registry() {
        let r = registry();
        assert_eq!(r.len(), 10);
        assert!(parse_registry("a\tb\tc\na\tb\tc\n").is_err());
        assert!(parse_registry("a\tb\n").is_err());
    }
}
