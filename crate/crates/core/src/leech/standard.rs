//! The Leech lattice in standard Golay-code coordinates (minimal norm 32).

use alloc::vec::Vec;

use super::model::{LeechLattice, DIM};
use crate::error::{Error, Result};
use crate::golay::GolayCode;

/// Membership by congruences: all coordinates congruent to m mod 2, the
/// sum congruent to 4m mod 8, and the positions congruent to 2 (m = 0) or
/// to 1 (m = 1) mod 4 forming a codeword.
pub fn std_predicate(code: &GolayCode, x: &[i64]) -> bool {
    if x.len() != DIM {
        return false;
    }
    let m = x[0].rem_euclid(2);
    if x.iter().any(|v| v.rem_euclid(2) != m) {
        return false;
    }
    let sum: i64 = x.iter().sum();
    if (sum - 4 * m).rem_euclid(8) != 0 {
        return false;
    }
    let target = if m == 0 { 2 } else { 1 };
    let mask = x.iter().enumerate().filter(|(_, v)| v.rem_euclid(4) == target).fold(0u32, |acc, (i, _)| acc | 1 << i);
    code.contains(mask)
}

/// Generators: twice the code basis, 4(e_i - e_{i+1}), 4(e_0 + e_1),
/// 8e_i and (-3, 1^23).
pub fn std_generators(code: &GolayCode) -> Vec<Vec<i64>> {
    let mut gens = Vec::new();
    for &w in code.basis() {
        gens.push((0..DIM).map(|i| if w >> i & 1 == 1 { 2 } else { 0 }).collect());
    }
    for i in 0..DIM - 1 {
        let mut r = alloc::vec![0i64; DIM];
        r[i] = 4;
        r[i + 1] = -4;
        gens.push(r);
    }
    let mut r = alloc::vec![0i64; DIM];
    r[0] = 4;
    r[1] = 4;
    gens.push(r);
    for i in 0..DIM {
        let mut r = alloc::vec![0i64; DIM];
        r[i] = 8;
        gens.push(r);
    }
    let mut r = alloc::vec![1i64; DIM];
    r[0] = -3;
    gens.push(r);
    gens
}

pub fn build_std_lattice(code: &GolayCode) -> Result<LeechLattice> {
    let gens = std_generators(code);
    if let Some(i) = gens.iter().position(|g| !std_predicate(code, g)) {
        return Err(Error::Calibration(alloc::format!("standard generator {i} fails the congruence predicate")));
    }
    LeechLattice::from_generators(&gens)
}

/// The reference shape vectors.
#[derive(Clone, Debug)]
pub struct StdShapes {
    /// (8, 0^23)
    pub eight: Vec<i64>,
    /// (4^4, 0^20) on four points of an octad
    pub a: Vec<i64>,
    /// (2^8, 4^2, 0^14) with the 2s on an octad
    pub b: Vec<i64>,
    /// (-2, 2^11, 4, 0^11) with the 2s on a dodecad
    pub c: Vec<i64>,
}

pub fn std_shapes(code: &GolayCode) -> Result<StdShapes> {
    let octad = *code.octads().first().ok_or_else(|| Error::Calibration("no octads".into()))?;
    let dodecad = *code.dodecads().first().ok_or_else(|| Error::Calibration("no dodecads".into()))?;
    let pts = |w: u32| (0..DIM).filter(move |&i| w >> i & 1 == 1);
    let off = |w: u32| (0..DIM).filter(move |&i| w >> i & 1 == 0);
    let mut eight = alloc::vec![0i64; DIM];
    eight[0] = 8;
    let mut a = alloc::vec![0i64; DIM];
    for i in pts(octad).take(4) {
        a[i] = 4;
    }
    let mut b = alloc::vec![0i64; DIM];
    for i in pts(octad) {
        b[i] = 2;
    }
    for i in off(octad).take(2) {
        b[i] = 4;
    }
    let mut c = alloc::vec![0i64; DIM];
    for i in pts(dodecad) {
        c[i] = 2;
    }
    c[pts(dodecad).next().unwrap()] = -2;
    c[off(dodecad).next().unwrap()] = 4;
    Ok(StdShapes { eight, a, b, c })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::GOLAY_TXT;
    use crate::leech::model::{dot, is_orthogonal_frame, norm};
    use proptest::prelude::*;
    use std::sync::OnceLock;

    fn code() -> &'static GolayCode {
        static C: OnceLock<GolayCode> = OnceLock::new();
        C.get_or_init(|| GolayCode::parse(GOLAY_TXT).unwrap())
    }

    pub(crate) fn lattice() -> &'static LeechLattice {
        static L: OnceLock<LeechLattice> = OnceLock::new();
        L.get_or_init(|| build_std_lattice(code()).unwrap())
    }

    #[test]
    fn unimodular_and_min_norm_32() {
        let l = lattice();
        assert!(l.gram_u_det() == 1.into());
        let short = l.short_vectors(31).unwrap();
        assert_eq!(short, alloc::vec![alloc::vec![0i64; DIM]]);
        assert!(l.basis().iter().all(|r| std_predicate(code(), r)));
    }

    #[test]
    fn shapes_are_members_of_type_4() {
        let l = lattice();
        let s = std_shapes(code()).unwrap();
        for v in [&s.eight, &s.a, &s.b, &s.c] {
            assert!(std_predicate(code(), v));
            assert!(l.is_member(v));
            assert_eq!(norm(v), 64);
            assert_eq!(l.class_type(v).unwrap(), 4);
        }
        let mut two = alloc::vec![0i64; DIM];
        two[0] = 2;
        assert!(!l.is_member(&two));
        assert!(!std_predicate(code(), &two));
    }

    #[test]
    fn frame_of_eight_e0() {
        let l = lattice();
        let s = std_shapes(code()).unwrap();
        let f = l.cross_frame(&l.class(&s.eight).unwrap()).unwrap();
        assert!(is_orthogonal_frame(&f));
        for v in &f {
            assert_eq!(v.iter().filter(|&&x| x != 0).count(), 1);
            assert_eq!(v.iter().sum::<i64>(), 8);
        }
        assert_eq!(l.canonical_rep(&l.class(&s.eight).unwrap()).unwrap()[..DIM - 1], [0i64; DIM - 1]);
    }

    #[test]
    fn double_lattice_class_contains_zero() {
        let l = lattice();
        let s = std_shapes(code()).unwrap();
        let v: Vec<i64> = s.b.iter().map(|x| 2 * x).collect();
        let got = l.coset_min_vectors(&v, 0).unwrap();
        assert_eq!(got, alloc::vec![alloc::vec![0i64; DIM]]);
        assert!(matches!(l.class_type(&v), Err(Error::InDoubleLattice)));
    }

    #[test]
    fn type2_classes_hold_one_pair() {
        let l = lattice();
        let short = l.short_vectors(32).unwrap();
        for x in short.iter().filter(|x| x.iter().any(|&c| c != 0)).step_by(997).take(50) {
            let v = l.from_coords(x);
            let got = l.coset_min_vectors(&v, 64).unwrap();
            assert_eq!(got.len(), 1);
            assert_eq!(norm(&got[0]), 32);
        }
    }

    #[test]
    fn forms_on_classes() {
        let l = lattice();
        let s = std_shapes(code()).unwrap();
        let c8 = l.class(&s.eight).unwrap();
        let ca = l.class(&s.a).unwrap();
        assert!(!l.q(&c8));
        assert_eq!(l.b(&c8, &ca), (dot(&s.eight, &s.a) / 8) % 2 == 1);
        assert!(!l.b(&c8, &ca));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn predicate_agrees_with_basis(c in proptest::collection::vec(-2i64..3, DIM), k in 0usize..DIM, d in -2i64..3) {
            let l = lattice();
            let mut v = l.from_coords(&c);
            prop_assert!(std_predicate(code(), &v));
            prop_assert!(l.is_member(&v));
            v[k] += d;
            prop_assert_eq!(std_predicate(code(), &v), l.is_member(&v));
        }
    }
}
