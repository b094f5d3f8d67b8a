//! Bundled constant texts and their content hashes.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use sha2::{Digest, Sha256};

pub const GOLAY_TXT: &str = include_str!("constants/golay.txt");
pub const M24_PERM: &str = include_str!("constants/m24.perm");
pub const A7XL3_PERM: &str = include_str!("constants/a7xl3.perm");

/// The constant texts a verification run consumes; replaceable for
/// fault-injection runs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constants {
    /// 12 rows of 24 `0`/`1` characters spanning the Golay code.
    pub golay: String,
    /// Generators of M24 on the 24 coordinates, perm-file format.
    pub m24: String,
    /// Generators of A7 x L3(2) on 7 + 7 points, perm-file format.
    pub a7xl3: String,
}

impl Default for Constants {
    fn default() -> Self {
        Constants { golay: GOLAY_TXT.to_string(), m24: M24_PERM.to_string(), a7xl3: A7XL3_PERM.to_string() }
    }
}

impl Constants {
    pub fn named(&self) -> Vec<(&'static str, &str)> {
        alloc::vec![("golay", self.golay.as_str()), ("m24", self.m24.as_str()), ("a7xl3", self.a7xl3.as_str())]
    }

    pub fn hash_of(&self, name: &str) -> Option<String> {
        self.named().into_iter().find(|(n, _)| *n == name).map(|(_, t)| sha256_hex(t.as_bytes()))
    }

    /// Flips one bit of the named constant.
    pub fn with_bit_flipped(&self, name: &str, bit: usize) -> Constants {
        let mut c = self.clone();
        let target = match name {
            "golay" => &mut c.golay,
            "m24" => &mut c.m24,
            "a7xl3" => &mut c.a7xl3,
            _ => panic!("unknown constant {name}"),
        };
        let mut bytes = core::mem::take(target).into_bytes();
        bytes[bit / 8] ^= 1 << (bit % 8);
        *target = String::from_utf8_lossy(&bytes).into_owned();
        c
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let d = Sha256::digest(bytes);
    let mut s = String::with_capacity(64);
    for b in d {
        use core::fmt::Write;
        let _ = write!(s, "{:02x}", b);
    }
    s
}
