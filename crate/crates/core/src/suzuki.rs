//! Sz(8) as 4x4 matrices over F8 acting on the 65 points of its ovoid.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact::F8;
use crate::modrep::cohomology::{GroupTable, Semidirect};
use crate::modrep::{C7Label, F2GModule, Section};
use crate::perm::finite::{center, closure, derived, exponent, frattini_2group, is_elementary_abelian, FiniteGroup, PermGroupElems};
use crate::perm::{point_stabilizer, Bsgs, PermGroup, Permutation};

pub const SZ8_ORDER: u64 = 29120;
pub const BOREL_ORDER: u64 = 448;

type Vec4 = [F8; 4];
type Mat4 = [[F8; 4]; 4];

/// The field automorphism with theta(theta(a)) = a^2.
pub fn theta(a: F8) -> F8 {
    a.pow(4)
}

fn ovoid_f(x: F8, y: F8) -> F8 {
    x * y + x.pow(4 + 2) + theta(y)
}

fn mat_apply(v: &Vec4, m: &Mat4) -> Vec4 {
    core::array::from_fn(|j| (0..4).fold(F8::ZERO, |acc, i| acc + v[i] * m[i][j]))
}

fn normalize(v: Vec4) -> Vec4 {
    let lead = v.iter().find(|a| !a.is_zero()).copied().expect("nonzero vector");
    let inv = lead.inv().expect("nonzero");
    v.map(|a| a * inv)
}

/// Unipotent element indexed by (a, b).
pub fn translation(a: F8, b: F8) -> Mat4 {
    let z = F8::ZERO;
    let o = F8::ONE;
    [[o, a, b, a * b + a.pow(4 + 2) + theta(b)], [z, o, theta(a), b + a.pow(4 + 1)], [z, z, o, a], [z, z, z, o]]
}

pub fn torus(k: F8) -> Mat4 {
    let z = F8::ZERO;
    [[F8::ONE, z, z, z], [z, k, z, z], [z, z, k.pow(4 + 1), z], [z, z, z, k.pow(4 + 2)]]
}

pub fn weyl() -> Mat4 {
    let z = F8::ZERO;
    let o = F8::ONE;
    [[z, z, z, o], [z, z, o, z], [z, o, z, z], [o, z, z, z]]
}

/// Sz(8) with its 65-point action.
#[derive(Clone, Debug)]
pub struct Sz8Group {
    pub points: Vec<Vec4>,
    pub group: PermGroup,
    pub bsgs: Bsgs,
    /// generators of the unipotent radical fixing point 0
    pub unipotent: Vec<Permutation>,
    pub torus: Permutation,
    pub weyl: Permutation,
}

fn to_perm(points: &[Vec4], index: &BTreeMap<[u8; 4], usize>, m: &Mat4) -> Result<Permutation> {
    let img: Vec<u32> = points
        .iter()
        .map(|p| {
            let q = normalize(mat_apply(p, m));
            index.get(&q.map(|a| a.bits())).map(|&i| i as u32)
        })
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Calibration("matrix does not preserve the ovoid".to_string()))?;
    Permutation::from_images(img).ok_or_else(|| Error::Calibration("matrix acts non-bijectively".to_string()))
}

pub fn build_sz8() -> Result<Sz8Group> {
    let mut points: Vec<Vec4> = alloc::vec![[F8::ZERO, F8::ZERO, F8::ZERO, F8::ONE]];
    for x in F8::all() {
        for y in F8::all() {
            points.push([F8::ONE, x, y, ovoid_f(x, y)]);
        }
    }
    let index: BTreeMap<[u8; 4], usize> = points.iter().enumerate().map(|(i, p)| (p.map(|a| a.bits()), i)).collect();
    let eta = F8::ETA;
    let mut unipotent = Vec::new();
    for (a, b) in [(F8::ONE, F8::ZERO), (eta, F8::ZERO), (eta * eta, F8::ZERO), (F8::ZERO, F8::ONE), (F8::ZERO, eta), (F8::ZERO, eta * eta)] {
        unipotent.push(to_perm(&points, &index, &translation(a, b))?);
    }
    let torus = to_perm(&points, &index, &torus(eta))?;
    let weyl = to_perm(&points, &index, &weyl())?;
    let mut gens = unipotent.clone();
    gens.push(torus.clone());
    gens.push(weyl.clone());
    let group = PermGroup::new(points.len(), gens);
    let bsgs = group.bsgs();
    if bsgs.order() != SZ8_ORDER {
        return Err(Error::WrongOrder { expected: SZ8_ORDER, got: bsgs.order() });
    }
    Ok(Sz8Group { points, group, bsgs, unipotent, torus, weyl })
}

impl Sz8Group {
    /// Stabilizer of the point at infinity (index 0).
    pub fn borel(&self) -> PermGroup {
        point_stabilizer(&self.group, 0)
    }

    /// The unipotent radical as a listed group.
    pub fn sylow2(&self) -> BTreeSet<Permutation> {
        closure(&PermGroupElems::new(self.group.clone()), &self.unipotent, 64).expect("order 64")
    }

    /// Whether the point stabilizer is transitive on the other 64 points.
    pub fn is_2_transitive(&self) -> bool {
        let orbits = self.group.orbit_partition();
        let stab = point_stabilizer(&self.group, 0).orbit_partition();
        orbits.sizes.len() == 1 && stab.histogram() == [(1usize, 1usize), (64, 1)].into_iter().collect()
    }
}

/// Z(P) = P' = Phi(P) elementary of order 8 and exponent 4, for |P| = 64.
pub fn is_suzuki_2group<G: FiniteGroup + ?Sized>(g: &G, p: &BTreeSet<G::Elem>) -> bool {
    suzuki_2group_check(g, p).unwrap_or(false)
}

/// As [`is_suzuki_2group`], but with an error for the wrong order.
pub fn suzuki_2group_check<G: FiniteGroup + ?Sized>(g: &G, p: &BTreeSet<G::Elem>) -> Result<bool> {
    if p.len() != 64 {
        return Err(Error::WrongOrder { expected: 64, got: p.len() as u64 });
    }
    if exponent(g, p) != 4 {
        return Ok(false);
    }
    let z = center(g, p);
    if z.len() != 8 || !is_elementary_abelian(g, &z) {
        return Ok(false);
    }
    Ok(derived(g, p) == z && frattini_2group(g, p) == z)
}

/// The two 3-dimensional C7-modules Z(P) and P/Z(P).
#[derive(Clone, Debug)]
pub struct BorelModules {
    pub bottom: F2GModule,
    pub top: F2GModule,
    pub isomorphic: bool,
}

/// Compare the conjugation action of x on `low` and on `high/low`.
pub fn section_pair_check<G: FiniteGroup + ?Sized>(g: &G, high: &BTreeSet<G::Elem>, low: &BTreeSet<G::Elem>, x: &G::Elem) -> Result<BorelModules> {
    let one: BTreeSet<G::Elem> = [g.identity()].into_iter().collect();
    let bottom = Section::new(g, low, &one)?.conjugation_module(g, core::slice::from_ref(x))?;
    let top = Section::new(g, high, low)?.conjugation_module(g, core::slice::from_ref(x))?;
    let isomorphic = bottom.is_isomorphic(&top);
    Ok(BorelModules { bottom, top, isomorphic })
}

pub fn borel_module_check(sz: &Sz8Group) -> Result<BorelModules> {
    let g = PermGroupElems::new(sz.group.clone());
    let p = sz.sylow2();
    let z = center(&g, &p);
    section_pair_check(&g, &p, &z, &sz.torus)
}

/// Involutions inverting the torus element and how many of them generate
/// Sz(8) together with Z(P) and x.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmalgamResult {
    pub inverting_involutions: usize,
    pub generating: usize,
    pub generated_order: u64,
}

pub fn amalgam_generation(sz: &Sz8Group) -> AmalgamResult {
    let g = PermGroupElems::new(sz.group.clone());
    let p = sz.sylow2();
    let z: Vec<Permutation> = center(&g, &p).into_iter().collect();
    let x = &sz.torus;
    let xi = x.inv();
    let mut inverting = 0;
    let mut generating = 0;
    let mut generated_order = 0;
    sz.bsgs.for_each_element(|t| {
        if t.is_identity() || !t.mul(t).is_identity() || t.mul(x).mul(t) != xi {
            return;
        }
        inverting += 1;
        let mut gens = z.clone();
        gens.push(x.clone());
        gens.push(t.clone());
        let ord = PermGroup::new(65, gens).order();
        if ord == SZ8_ORDER {
            generating += 1;
            generated_order = ord;
        }
    });
    AmalgamResult { inverting_involutions: inverting, generating, generated_order }
}

/// The cyclic group of order 7 as residues.
struct CyclicSeven;

impl FiniteGroup for CyclicSeven {
    type Elem = u8;
    fn identity(&self) -> u8 {
        0
    }
    fn mul(&self, a: &u8, b: &u8) -> u8 {
        (a + b) % 7
    }
    fn inv(&self, a: &u8) -> u8 {
        (7 - a) % 7
    }
    fn generators(&self) -> Vec<u8> {
        alloc::vec![1]
    }
}

/// Negative control for `section_pair_check`: 2^6:7 with the 2^6 = 3a + 3b,
/// compared across the 3a submodule.
pub fn mixed_type_control() -> Result<BorelModules> {
    let m = F2GModule::c7_irreducible(C7Label::CubicA).direct_sum(&F2GModule::c7_irreducible(C7Label::CubicB));
    let sd = Semidirect::new(GroupTable::build(&CyclicSeven, &[1]).0, &m);
    let v = sd.translations();
    let low: BTreeSet<(u16, u32)> = (0..8u32).map(|a| (0, a)).collect();
    let x = sd.generators()[0];
    section_pair_check(&sd, &v, &low, &x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_points() {
        let sz = build_sz8().unwrap();
        assert_eq!(sz.points.len(), 65);
        assert_eq!(sz.bsgs.order(), 29120);
        assert_eq!(sz.borel().order(), BOREL_ORDER);
        assert!(sz.is_2_transitive());
    }

    #[test]
    fn squaring_twist_fails() {
        // with theta = square the translation family does not preserve the point set
        let pts: BTreeSet<[u8; 4]> =
            F8::all().flat_map(|x| F8::all().map(move |y| [1, x.bits(), y.bits(), (x * y + x.pow(4) + y.pow(2)).bits()])).collect();
        let m = {
            let a = F8::ETA;
            let (z, o) = (F8::ZERO, F8::ONE);
            [[o, a, z, a.pow(4)], [z, o, a.pow(2), a.pow(3)], [z, z, o, a], [z, z, z, o]]
        };
        let moved_off = pts.iter().any(|p| {
            let v = mat_apply(&p.map(F8::new), &m);
            v[0] == F8::ONE && !pts.contains(&v.map(|a| a.bits()))
        });
        assert!(moved_off);
    }

    #[test]
    fn sylow_is_suzuki() {
        let sz = build_sz8().unwrap();
        let g = PermGroupElems::new(sz.group.clone());
        let p = sz.sylow2();
        assert!(is_suzuki_2group(&g, &p));
        let z = center(&g, &p);
        // x permutes the 7 central involutions transitively
        let orbit: BTreeSet<Permutation> = (0..7).map(|k| z.iter().find(|a| !a.is_identity()).unwrap().conj(&sz.torus.pow(k))).collect();
        assert_eq!(orbit.len(), 7);
    }

    #[test]
    fn recognizer_negatives() {
        struct Elem2;
        impl FiniteGroup for Elem2 {
            type Elem = u32;
            fn identity(&self) -> u32 {
                0
            }
            fn mul(&self, a: &u32, b: &u32) -> u32 {
                a ^ b
            }
            fn inv(&self, a: &u32) -> u32 {
                *a
            }
            fn generators(&self) -> Vec<u32> {
                (0..6).map(|i| 1 << i).collect()
            }
        }
        let els: BTreeSet<u32> = (0..64).collect();
        assert!(!is_suzuki_2group(&Elem2, &els));
        // D8 x D8 on 8 points
        let r = Permutation::from_cycles(8, &[&[0, 1, 2, 3]]).unwrap();
        let s = Permutation::from_cycles(8, &[&[1, 3]]).unwrap();
        let r2 = Permutation::from_cycles(8, &[&[4, 5, 6, 7]]).unwrap();
        let s2 = Permutation::from_cycles(8, &[&[5, 7]]).unwrap();
        let g = PermGroupElems::new(PermGroup::new(8, alloc::vec![r, s, r2, s2]));
        let d8d8: BTreeSet<Permutation> = g.elements().into_iter().collect();
        assert_eq!(d8d8.len(), 64);
        assert!(!is_suzuki_2group(&g, &d8d8));
        assert!(suzuki_2group_check(&g, &BTreeSet::new()).is_err());
    }

    #[test]
    fn borel_sections_are_dual() {
        let sz = build_sz8().unwrap();
        let b = borel_module_check(&sz).unwrap();
        assert_eq!((b.bottom.dim(), b.top.dim()), (3, 3));
        // oracle: Z(P) is the image of the commutator map on the exterior
        // square of P/Z(P), whose eigenvalues are the pairwise products
        let top = b.top.c7_label().unwrap();
        let wedge = match top {
            C7Label::CubicA => C7Label::CubicB,
            C7Label::CubicB => C7Label::CubicA,
            C7Label::One => unreachable!(),
        };
        assert_eq!(b.bottom.c7_label().unwrap(), wedge);
        assert!(!b.isomorphic);
    }

    #[test]
    fn mixed_type_control_is_not_isomorphic() {
        assert!(!mixed_type_control().unwrap().isomorphic);
    }

    #[test]
    fn amalgam_generates() {
        let sz = build_sz8().unwrap();
        let r = amalgam_generation(&sz);
        assert_eq!(r.inverting_involutions, 7);
        assert!(r.generating >= 1);
        assert_eq!(r.generated_order, SZ8_ORDER);
    }
}
