//! Text format for permutation generators.
//!
//! ```text
//! <degree> <count>
//! <degree space-separated 1-based images>   (count lines)
//! ```
//! The header may also be written `degree <degree> <count>`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermFile {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl PermFile {
    pub fn group(&self) -> PermGroup {
        PermGroup::new(self.degree, self.generators.clone())
    }
}

fn err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse { line, reason: reason.into() }
}

pub fn parse_perm_file(bytes: &[u8]) -> Result<PermFile> {
    let text = core::str::from_utf8(bytes).map_err(|e| err(0, format!("not UTF-8: {e}")))?;
    // digits, spaces, tabs and newlines only, apart from the header keyword
    for (i, line) in text.split('\n').enumerate() {
        let body = line.trim_start().strip_prefix("degree").filter(|_| i == 0).unwrap_or(line);
        if let Some(c) = body.chars().find(|c| !(c.is_ascii_digit() || *c == ' ' || *c == '\t' || *c == '\r')) {
            return Err(err(i + 1, format!("unexpected character {c:?}")));
        }
    }
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (hl, header) = lines.next().ok_or_else(|| err(1, "missing header"))?;
    let mut fields: Vec<&str> = header.split_whitespace().collect();
    if fields.first() == Some(&"degree") {
        fields.remove(0);
    }
    if fields.len() != 2 {
        return Err(err(hl + 1, "header must be `<degree> <count>`"));
    }
    let degree: usize = fields[0].parse().map_err(|_| err(hl + 1, "bad degree"))?;
    let count: usize = fields[1].parse().map_err(|_| err(hl + 1, "bad generator count"))?;
    if degree == 0 || degree > u32::MAX as usize / 2 {
        return Err(err(hl + 1, "degree out of range"));
    }
    let mut generators = Vec::with_capacity(count);
    for _ in 0..count {
        let (ln, line) = lines.next().ok_or_else(|| err(0, format!("truncated: expected {count} generators")))?;
        let ln = ln + 1;
        let mut img = Vec::with_capacity(degree);
        let mut seen = alloc::vec![false; degree];
        for tok in line.split_whitespace() {
            let v: u64 = tok.parse().map_err(|_| err(ln, format!("bad image {tok:?}")))?;
            if v == 0 || v > degree as u64 {
                return Err(err(ln, format!("image {v} outside 1..{degree}")));
            }
            let v = (v - 1) as usize;
            if seen[v] {
                return Err(err(ln, format!("repeated image {}", v + 1)));
            }
            seen[v] = true;
            img.push(v as u32);
        }
        if img.len() != degree {
            return Err(err(ln, format!("expected {degree} images, found {}", img.len())));
        }
        generators.push(Permutation::from_images(img).expect("checked bijection"));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(err(ln + 1, "trailing data after the last generator"));
    }
    Ok(PermFile { degree, generators })
}

pub fn serialize_perm_file(f: &PermFile) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    let _ = writeln!(s, "{} {}", f.degree, f.generators.len());
    for g in &f.generators {
        let mut first = true;
        for &x in g.images() {
            if !first {
                s.push(' ');
            }
            let _ = write!(s, "{}", x + 1);
            first = false;
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn three_cycle() {
        let f = parse_perm_file(b"3 1\n2 3 1\n").unwrap();
        assert_eq!(f.degree, 3);
        assert_eq!(f.generators[0].cycle_type(), alloc::vec![3]);
        assert_eq!(parse_perm_file(b"degree 3 1\n2 3 1").unwrap(), f);
    }

    #[test]
    fn repeated_image_reported_on_line_two() {
        match parse_perm_file(b"3 1\n2 2 1\n") {
            Err(Error::Parse { line, reason }) => {
                assert_eq!(line, 2);
                assert!(reason.contains("repeated"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse_perm_file(b"").is_err());
        assert!(parse_perm_file(b"3 2\n2 3 1\n").is_err());
        assert!(parse_perm_file(b"3 1\n2 3\n").is_err());
        assert!(parse_perm_file(b"3 1\n2 3 4\n").is_err());
        assert!(parse_perm_file(b"3 1\n2 3 1\n1 2 3\n").is_err());
        assert!(parse_perm_file(b"3 1\n2 x 1\n").is_err());
    }

    proptest! {
        #[test]
        fn round_trip(v in Just((0..40u32).collect::<Vec<_>>()).prop_shuffle(), w in Just((0..40u32).collect::<Vec<_>>()).prop_shuffle()) {
            let f = PermFile { degree: 40, generators: alloc::vec![Permutation::from_images(v).unwrap(), Permutation::from_images(w).unwrap()] };
            prop_assert_eq!(parse_perm_file(serialize_perm_file(&f).as_bytes()).unwrap(), f);
        }
    }
}
