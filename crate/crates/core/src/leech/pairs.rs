//! Pure 2B pairs of crosses and their classification by frame profiles.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use super::model::{dot, LeechLattice};
use crate::error::{Error, Result};
use crate::exact::f2::F2Vec;

/// Multiset of |f.g| over f, g in the two frames, as value -> count.
pub type Profile = BTreeMap<i64, usize>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairType {
    A,
    B,
    C,
}

impl fmt::Display for PairType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairType::A => "a",
            PairType::B => "b",
            PairType::C => "c",
        })
    }
}

pub fn profile_of_frames(f1: &[Vec<i64>], f2: &[Vec<i64>]) -> Profile {
    let mut p = Profile::new();
    for f in f1 {
        for g in f2 {
            *p.entry(dot(f, g).abs()).or_default() += 1;
        }
    }
    p
}

/// Checks B(c1, c2) = 0 and that c1, c2 and c1 + c2 all have type 4.
pub fn check_pure(l: &LeechLattice, c1: &F2Vec, c2: &F2Vec) -> Result<()> {
    if c1 == c2 {
        return Err(Error::NotPure("classes coincide"));
    }
    if l.b(c1, c2) {
        return Err(Error::NotPure("classes do not commute"));
    }
    for c in [c1, c2, &c1.xor(c2)] {
        if l.class_type_of(c)? != 4 {
            return Err(Error::NotPure("a class of the pair is not of type 4"));
        }
    }
    Ok(())
}

pub fn pair_profile(l: &LeechLattice, c1: &F2Vec, c2: &F2Vec) -> Result<Profile> {
    check_pure(l, c1, c2)?;
    Ok(profile_of_frames(&l.cross_frame(c1)?, &l.cross_frame(c2)?))
}

/// Reference profiles for the three pair types, computed from (8, 0^23)
/// against the three standard shapes.
pub const GOLDEN_A: &[(i64, usize)] = &[(0, 480), (32, 96)];
pub const GOLDEN_B: &[(i64, usize)] = &[(0, 288), (16, 256), (32, 32)];
pub const GOLDEN_C: &[(i64, usize)] = &[(0, 264), (16, 288), (32, 24)];

pub fn golden(t: PairType) -> Profile {
    let src = match t {
        PairType::A => GOLDEN_A,
        PairType::B => GOLDEN_B,
        PairType::C => GOLDEN_C,
    };
    src.iter().copied().collect()
}

pub fn classify_profile(p: &Profile) -> Result<PairType> {
    [PairType::A, PairType::B, PairType::C].into_iter().find(|&t| golden(t) == *p).ok_or(Error::UnknownProfile)
}

pub fn classify_pure22(l: &LeechLattice, c1: &F2Vec, c2: &F2Vec) -> Result<PairType> {
    classify_profile(&pair_profile(l, c1, c2)?)
}

/// Pair types over all pairs of distinct nonzero elements of a space of
/// crosses, counted by type.
pub fn pair_types_of_space(l: &LeechLattice, elems: &[F2Vec]) -> Result<BTreeMap<PairType, usize>> {
    let nz: Vec<&F2Vec> = elems.iter().filter(|e| !e.is_zero()).collect();
    let frames: Vec<Vec<Vec<i64>>> = nz.iter().map(|c| l.cross_frame(c)).collect::<Result<_>>()?;
    let mut out = BTreeMap::new();
    for i in 0..nz.len() {
        for j in i + 1..nz.len() {
            if l.b(nz[i], nz[j]) {
                return Err(Error::NotPure("classes do not commute"));
            }
            let t = classify_profile(&profile_of_frames(&frames[i], &frames[j]))?;
            *out.entry(t).or_default() += 1;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::GOLAY_TXT;
    use crate::golay::GolayCode;
    use crate::leech::standard::{build_std_lattice, std_shapes};

    #[test]
    fn golden_profiles_from_standard_shapes() {
        let code = GolayCode::parse(GOLAY_TXT).unwrap();
        let l = build_std_lattice(&code).unwrap();
        let s = std_shapes(&code).unwrap();
        let c8 = l.class(&s.eight).unwrap();
        let got: Vec<Profile> = [&s.a, &s.b, &s.c].iter().map(|v| pair_profile(&l, &c8, &l.class(v).unwrap()).unwrap()).collect();
        assert_eq!(got, [golden(PairType::A), golden(PairType::B), golden(PairType::C)]);
        assert!(got[0] != got[1] && got[1] != got[2] && got[0] != got[2]);
        for p in &got {
            assert_eq!(p.values().sum::<usize>(), 576);
        }
    }
}
