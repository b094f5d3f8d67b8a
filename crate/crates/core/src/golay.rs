//! The extended binary Golay code on 24 points and M24.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};
use crate::permfile::parse_perm_file;

pub const OMEGA: u32 = (1 << 24) - 1;

/// Codewords as 24-bit masks.
#[derive(Clone, Debug)]
pub struct GolayCode {
    basis: Vec<u32>,
    words: BTreeSet<u32>,
}

impl GolayCode {
    /// Parses exactly 12 newline-terminated rows of 24 `0`/`1` characters
    /// and checks the code parameters [24, 12, 8] and double evenness.
    pub fn parse(text: &str) -> Result<Self> {
        if !text.ends_with('\n') {
            return Err(Error::Parse { line: text.lines().count(), reason: "missing final newline".into() });
        }
        let mut basis = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if line.len() != 24 || !line.bytes().all(|b| b == b'0' || b == b'1') {
                return Err(Error::Parse { line: i + 1, reason: format!("expected 24 binary digits, got {line:?}") });
            }
            let w = line.bytes().enumerate().fold(0u32, |acc, (k, b)| acc | ((b == b'1') as u32) << k);
            basis.push(w);
        }
        let mut words = BTreeSet::new();
        words.insert(0u32);
        for &b in &basis {
            let more: Vec<u32> = words.iter().map(|w| w ^ b).collect();
            words.extend(more);
        }
        let code = GolayCode { basis, words };
        let min = code.words.iter().filter(|&&w| w != 0).map(|w| w.count_ones()).min().unwrap_or(0);
        let doubly_even = code.words.iter().all(|w| w.count_ones() % 4 == 0);
        if code.basis.len() != 12 || code.words.len() != 4096 || min != 8 || !doubly_even || !code.contains(OMEGA) {
            return Err(Error::Calibration(format!(
                "not the Golay code: {} rows, {} words, minimum weight {}",
                code.basis.len(),
                code.words.len(),
                min
            )));
        }
        Ok(code)
    }

    pub fn basis(&self) -> &[u32] {
        &self.basis
    }

    pub fn contains(&self, w: u32) -> bool {
        self.words.contains(&w)
    }

    pub fn words(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().copied()
    }

    pub fn octads(&self) -> Vec<u32> {
        self.words().filter(|w| w.count_ones() == 8).collect()
    }

    pub fn dodecads(&self) -> Vec<u32> {
        self.words().filter(|w| w.count_ones() == 12).collect()
    }

    pub fn weight_distribution(&self) -> [usize; 25] {
        let mut d = [0usize; 25];
        for w in self.words() {
            d[w.count_ones() as usize] += 1;
        }
        d
    }

    pub fn preserved_by(&self, p: &Permutation) -> bool {
        self.basis.iter().all(|&b| self.contains(p.image_mask(b as u64) as u32))
    }
}

/// M24 as read from its generator file, checked against the code.
pub fn m24_group(text: &str, code: &GolayCode) -> Result<PermGroup> {
    let f = parse_perm_file(text.as_bytes())?;
    if f.degree != 24 {
        return Err(Error::Calibration(format!("M24 generators have degree {}", f.degree)));
    }
    if let Some(i) = f.generators.iter().position(|g| !code.preserved_by(g)) {
        return Err(Error::Calibration(format!("generator {} does not preserve the code", i + 1)));
    }
    Ok(f.group())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{GOLAY_TXT, M24_PERM};

    #[test]
    fn weight_distribution() {
        let c = GolayCode::parse(GOLAY_TXT).unwrap();
        let d = c.weight_distribution();
        assert_eq!((d[0], d[8], d[12], d[16], d[24]), (1, 759, 2576, 759, 1));
    }

    #[test]
    fn m24_order() {
        let c = GolayCode::parse(GOLAY_TXT).unwrap();
        let g = m24_group(M24_PERM, &c).unwrap();
        assert_eq!(g.order(), 244_823_040);
    }

    #[test]
    fn corrupted_code_rejected() {
        let mut t = alloc::string::String::from(GOLAY_TXT);
        t.replace_range(0..1, if GOLAY_TXT.starts_with('1') { "0" } else { "1" });
        assert!(GolayCode::parse(&t).is_err());
    }
}
