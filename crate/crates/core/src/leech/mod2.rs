//! Lambda/2Lambda in the octonionic model: the 7-cycle, the L3(2)
//! generators, the isotypic parts and the 73 F8-lines of the 3a part.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use super::model::{LeechLattice, DIM};
use super::octo::{self, ConwayGen, OctTriple};
use crate::error::{Error, Result};
use crate::exact::f2::{F2Matrix, F2Vec, Subspace};
use crate::modrep::{C7Label, F2GModule, Isotypic};
use crate::perm::group::point_stabilizer;
use crate::perm::{PermGroup, Permutation};

pub struct Mod2Space<'a> {
    pub lattice: &'a LeechLattice,
    pub sigma: F2Matrix,
    /// coordinate permutations, a sign change and g1/2
    pub l32: Vec<(String, F2Matrix)>,
    pub iso: Isotypic,
}

/// Checks that `m` preserves q and B on a basis.
pub fn preserves_forms(l: &LeechLattice, m: &F2Matrix) -> bool {
    let imgs: Vec<F2Vec> = (0..DIM).map(|i| m.apply(&F2Vec::unit(DIM, i))).collect();
    (0..DIM).all(|i| l.q(&imgs[i]) == l.q(&F2Vec::unit(DIM, i)))
        && (0..DIM).all(|i| (i + 1..DIM).all(|j| l.b(&imgs[i], &imgs[j]) == l.b(&F2Vec::unit(DIM, i), &F2Vec::unit(DIM, j))))
}

pub fn mod2_space(l: &LeechLattice) -> Result<Mod2Space<'_>> {
    let sigma = octo::mod2_matrix(l, &ConwayGen::Sigma7)?;
    let mut l32 = Vec::new();
    for (name, g) in [
        ("perm(1 2)", ConwayGen::CoordPerm([1, 0, 2])),
        ("perm(1 2 3)", ConwayGen::CoordPerm([1, 2, 0])),
        ("sign(1)", ConwayGen::SignChange([true, false, false])),
        ("g1/2", octo::g1_half()),
    ] {
        l32.push((String::from(name), octo::mod2_matrix(l, &g)?));
    }
    for m in core::iter::once(&sigma).chain(l32.iter().map(|(_, m)| m)) {
        if !preserves_forms(l, m) {
            return Err(Error::Calibration(String::from("generator does not preserve q")));
        }
    }
    let iso = F2GModule::new(DIM, alloc::vec![sigma.clone()]).isotypic_c7()?;
    Ok(Mod2Space { lattice: l, sigma, l32, iso })
}

impl Mod2Space<'_> {
    pub fn class_of(&self, v: &OctTriple) -> Result<F2Vec> {
        self.lattice.class(&v.to_ambient().ok_or(Error::NotInLattice)?)
    }

    /// The isotypic part (index into 1, x^3+x+1, x^3+x^2+1) containing `c`.
    pub fn part_of(&self, c: &F2Vec) -> Option<usize> {
        (0..3).find(|&i| !c.is_zero() && self.iso.parts[i].contains(c))
    }

    pub fn label_of_part(i: usize) -> C7Label {
        [C7Label::One, C7Label::CubicA, C7Label::CubicB][i]
    }

    /// span{v, v sigma, v sigma^2}
    pub fn sigma_span(&self, v: &F2Vec) -> Subspace {
        let v1 = self.sigma.apply(v);
        let v2 = self.sigma.apply(&v1);
        Subspace::span(DIM, [v.clone(), v1, v2])
    }

    /// All sigma-invariant 3-spaces inside a cubic isotypic part.
    pub fn lines(&self, part: usize) -> Vec<Subspace> {
        let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
        let mut out = Vec::new();
        for v in self.iso.parts[part].elements() {
            if v.is_zero() {
                continue;
            }
            let s = self.sigma_span(&v);
            if seen.insert(line_key(&s)) {
                out.push(s);
            }
        }
        out
    }
}

pub fn line_key(s: &Subspace) -> Vec<u64> {
    let mut k: Vec<u64> = s.elements().iter().map(|e| e.to_u64()).collect();
    k.sort_unstable();
    k
}

/// Permutation action of matrices on a list of subspaces.
pub struct LineAction {
    pub group: PermGroup,
}

impl LineAction {
    pub fn new(lines: &[Subspace], mats: &[&F2Matrix]) -> Result<Self> {
        let index: BTreeMap<Vec<u64>, usize> = lines.iter().enumerate().map(|(i, s)| (line_key(s), i)).collect();
        let mut gens = Vec::new();
        for m in mats {
            let img: Option<Vec<u32>> = lines
                .iter()
                .map(|s| {
                    let t = Subspace::span(DIM, s.basis().iter().map(|b| m.apply(b)));
                    index.get(&line_key(&t)).map(|&i| i as u32)
                })
                .collect();
            let img = img.ok_or_else(|| Error::Calibration(String::from("matrix does not permute the lines")))?;
            gens.push(Permutation::from_images(img).ok_or_else(|| Error::Calibration(String::from("not a permutation")))?);
        }
        Ok(LineAction { group: PermGroup::new(lines.len(), gens) })
    }

    /// (orbit size, stabilizer order) for the orbit of every line.
    pub fn orbit_data(&self) -> Vec<(usize, u64)> {
        let part = self.group.orbit_partition();
        let mut stab_cache: BTreeMap<u32, u64> = BTreeMap::new();
        (0..self.group.degree())
            .map(|i| {
                let id = part.orbit_of[i];
                let st = *stab_cache.entry(id).or_insert_with(|| point_stabilizer(&self.group, i).order());
                (part.sizes[id as usize], st)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leech::octo::{quoted_vector, tests::lattice};

    #[test]
    fn isotypic_and_lines() {
        let l = lattice();
        let sp = mod2_space(l).unwrap();
        let m = sp.iso.multiplicities;
        assert_eq!((m[0], 3 * m[1], 3 * m[2]), (6, 9, 9));
        let ex1 = sp.class_of(&quoted_vector("2(-1+i0+i1+i3,0,0)")).unwrap();
        let p = sp.part_of(&ex1).unwrap();
        assert!(p > 0);
        let lines = sp.lines(p);
        assert_eq!(lines.len(), 73);
        let mats: Vec<&F2Matrix> = sp.l32.iter().map(|(_, m)| m).collect();
        let act = LineAction::new(&lines, &mats).unwrap();
        assert_eq!(act.group.order(), 168);
        let h = act.group.orbit_partition().histogram();
        assert_eq!(h.into_iter().collect::<Vec<_>>(), [(7, 1), (24, 1), (42, 1)]);
    }
}
