//! The 73 sigma7-lines of crosses, the L3(2) orbits on them, and the
//! three worked 2^3 examples located in those orbits.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::mod2::{line_key, mod2_space, LineAction, Mod2Space};
use super::model::{LeechLattice, DIM};
use super::octo::{quoted_vector, OctTriple};
use super::pairs::{pair_types_of_space, PairType};
use crate::error::{Error, Result};
use crate::exact::f2::{F2Vec, Subspace};
use crate::exact::{DyadicRational, Octonion};
use crate::perm::group::point_stabilizer;
use crate::perm::{PermGroup, Permutation};
use crate::projective::small_group_type;

pub type PairCounts = BTreeMap<PairType, usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineOrbit {
    pub size: usize,
    pub stabilizer_order: u64,
    pub stabilizer_type: String,
    /// pair types over the 21 pairs of a representative line
    pub pair_types: PairCounts,
    /// some element of order 7 in sigma x L3(2) fixes the line pointwise
    pub pointwise_seven: bool,
}

pub struct CrossSpaces<'a> {
    pub space: Mod2Space<'a>,
    pub part: usize,
    pub lines: Vec<Subspace>,
    pub group_order: u64,
    /// orbit index (into `orbits`) of every line
    pub line_orbit: Vec<usize>,
    pub orbits: Vec<LineOrbit>,
    /// every nonzero class of the part has type 4
    pub all_type4: bool,
    index: BTreeMap<Vec<u64>, usize>,
}

/// Builds the lines of the cubic part containing the Example 1 class and
/// the L3(2) action on them.
pub fn cross_spaces(l: &LeechLattice) -> Result<CrossSpaces<'_>> {
    let space = mod2_space(l)?;
    let ex1 = space.class_of(&quoted_vector("2(-1+i0+i1+i3,0,0)"))?;
    let part = space.part_of(&ex1).filter(|&p| p > 0).ok_or_else(|| Error::Calibration(String::from("Example 1 class is not in a cubic part")))?;
    let mut all_type4 = true;
    for c in space.iso.parts[part].elements() {
        if !c.is_zero() && l.class_type_of(&c)? != 4 {
            all_type4 = false;
        }
    }
    let lines = space.lines(part);
    let mats: Vec<_> = space.l32.iter().map(|(_, m)| m).collect();
    let action = LineAction::new(&lines, &mats)?;
    let part_of = action.group.orbit_partition();
    let mut reps: BTreeMap<u32, usize> = BTreeMap::new();
    for i in 0..lines.len() {
        reps.entry(part_of.orbit_of[i]).or_insert(i);
    }
    let on_part = PartAction::new(&space, part)?;
    let mut orbits: Vec<(u32, LineOrbit)> = Vec::new();
    for (&id, &i) in &reps {
        let stab = point_stabilizer(&action.group, i);
        let pointwise_seven = on_part.pointwise_stabilizer_order(&lines[i]) % 7 == 0;
        let pair_types = if all_type4 { pair_types_of_space(l, &lines[i].elements())? } else { PairCounts::new() };
        orbits.push((
            id,
            LineOrbit {
                size: part_of.sizes[id as usize],
                stabilizer_order: stab.order(),
                stabilizer_type: small_group_type(&stab),
                pair_types,
                pointwise_seven,
            },
        ));
    }
    orbits.sort_by_key(|(_, o)| o.size);
    let pos: BTreeMap<u32, usize> = orbits.iter().enumerate().map(|(k, (id, _))| (*id, k)).collect();
    let line_orbit = (0..lines.len()).map(|i| pos[&part_of.orbit_of[i]]).collect();
    let index = lines.iter().enumerate().map(|(i, s)| (line_key(s), i)).collect();
    Ok(CrossSpaces {
        group_order: action.group.order(),
        space,
        part,
        lines,
        line_orbit,
        orbits: orbits.into_iter().map(|(_, o)| o).collect(),
        all_type4,
        index,
    })
}

/// sigma and the L3(2) generators permuting the nonzero classes of a part.
struct PartAction {
    group: PermGroup,
    index: BTreeMap<u64, usize>,
}

impl PartAction {
    fn new(space: &Mod2Space<'_>, part: usize) -> Result<Self> {
        let pts: Vec<F2Vec> = space.iso.parts[part].elements().into_iter().filter(|c| !c.is_zero()).collect();
        let index: BTreeMap<u64, usize> = pts.iter().enumerate().map(|(i, c)| (c.to_u64(), i)).collect();
        let mut gens = Vec::new();
        for m in core::iter::once(&space.sigma).chain(space.l32.iter().map(|(_, m)| m)) {
            let img: Option<Vec<u32>> = pts.iter().map(|c| index.get(&m.apply(c).to_u64()).map(|&i| i as u32)).collect();
            let img = img.and_then(Permutation::from_images).ok_or_else(|| Error::Calibration(String::from("part is not invariant")))?;
            gens.push(img);
        }
        Ok(PartAction { group: PermGroup::new(pts.len(), gens), index })
    }

    fn pointwise_stabilizer_order(&self, s: &Subspace) -> u64 {
        let mut g = self.group.clone();
        for c in s.elements() {
            if let Some(&i) = self.index.get(&c.to_u64()) {
                g = point_stabilizer(&g, i);
            }
        }
        g.order()
    }
}

impl CrossSpaces<'_> {
    pub fn line_index(&self, s: &Subspace) -> Option<usize> {
        self.index.get(&line_key(s)).copied()
    }

    /// Orbit size of the line spanned by `c` and its sigma-images.
    pub fn orbit_size_of_class(&self, c: &F2Vec) -> Option<usize> {
        let i = self.line_index(&self.space.sigma_span(c))?;
        Some(self.orbits[self.line_orbit[i]].size)
    }

    /// The orbit with the given pair-type counts and pointwise centralizing
    /// 7-element flag, if exactly one matches.
    pub fn orbit_size_by_invariants(&self, p: &PairCounts, pointwise_seven: bool) -> Option<usize> {
        let hits: Vec<&LineOrbit> = self.orbits.iter().filter(|o| o.pair_types == *p && o.pointwise_seven == pointwise_seven).collect();
        match hits.as_slice() {
            [o] => Some(o.size),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorCheck {
    pub name: String,
    pub member: bool,
    pub class_type: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExampleCheck {
    pub vectors: Vec<VectorCheck>,
    pub rank: usize,
    pub sigma_invariant: bool,
    pub orbit_size: Option<usize>,
    pub pair_types: Option<PairCounts>,
}

impl ExampleCheck {
    pub fn all_members_type4(&self) -> bool {
        self.vectors.iter().all(|v| v.member && v.class_type == Some(4))
    }
}

fn check_vectors(l: &LeechLattice, vs: &[(String, OctTriple)]) -> (Vec<VectorCheck>, Vec<F2Vec>) {
    let mut checks = Vec::new();
    let mut classes = Vec::new();
    for (name, v) in vs {
        let amb = v.to_ambient().filter(|a| l.is_member(a));
        let class = amb.as_ref().and_then(|a| l.class(a).ok());
        let class_type = class.as_ref().and_then(|c| l.class_type_of(c).ok());
        checks.push(VectorCheck { name: name.clone(), member: amb.is_some(), class_type });
        classes.extend(class);
    }
    (checks, classes)
}

fn pair_types_if_pure(l: &LeechLattice, s: &Subspace) -> Option<PairCounts> {
    pair_types_of_space(l, &s.elements()).ok()
}

/// 2(-1+i0+i1+i3,0,0) and its sigma-images.
pub fn example1(cs: &CrossSpaces<'_>) -> ExampleCheck {
    let l = cs.space.lattice;
    let v = quoted_vector("2(-1+i0+i1+i3,0,0)");
    let images: Vec<(String, OctTriple)> =
        (0..7).map(|k| (alloc::format!("sigma^{k} 2(-1+i0+i1+i3,0,0)"), OctTriple(v.0.clone().map(|c| c.rotate(k))))).collect();
    let (vectors, classes) = check_vectors(l, &images);
    let span = Subspace::span(DIM, classes.iter().cloned());
    ExampleCheck {
        rank: span.dim(),
        sigma_invariant: span.is_invariant(&cs.space.sigma),
        orbit_size: classes.first().and_then(|c| cs.orbit_size_of_class(c)),
        pair_types: pair_types_if_pure(l, &span),
        vectors,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoFive {
    pub rank: usize,
    pub totally_singular: bool,
    pub second_vector_member: bool,
    pub second_vector_orbit: Option<usize>,
}

/// The Example 1 line with the class of (4,0,0); together with the centre
/// this is elementary abelian of rank dim + 1 when q vanishes on it.
pub fn example1_extension(cs: &CrossSpaces<'_>) -> Result<TwoFive> {
    let l = cs.space.lattice;
    let c1 = cs.space.class_of(&quoted_vector("2(-1+i0+i1+i3,0,0)"))?;
    let c4 = cs.space.class_of(&quoted_vector("(4,0,0)"))?;
    let mut s = cs.space.sigma_span(&c1);
    s.insert(c4);
    let basis = s.basis().to_vec();
    let totally_singular = s.elements().iter().all(|c| !l.q(c)) && basis.iter().all(|a| basis.iter().all(|b| !l.b(a, b)));
    let second = quoted_vector("(-2-i0+i3+i5+i6)(1,1,0)");
    let amb = second.to_ambient().filter(|a| l.is_member(a));
    let second_vector_orbit = amb.as_ref().and_then(|a| l.class(a).ok()).and_then(|c| cs.orbit_size_of_class(&c));
    Ok(TwoFive { rank: s.dim() + 1, totally_singular, second_vector_member: amb.is_some(), second_vector_orbit })
}

/// (4,0,0), 2(u,1,1), 2(u,1,-1) and their coordinate permutations, with
/// u = s-bar as printed or u = s.
pub fn example2_vectors(u_is_s_bar: bool) -> Vec<(String, OctTriple)> {
    let two = DyadicRational::from_int(2);
    let (u, uname) = if u_is_s_bar { (Octonion::s_bar(), "s-bar") } else { (Octonion::s(), "s") };
    let mut out = alloc::vec![(String::from("(4,0,0)"), quoted_vector("(4,0,0)"))];
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
    for sign in [1i64, -1] {
        let base = [u.clone(), Octonion::one(), Octonion::real(sign)];
        for p in perms {
            let v = OctTriple(core::array::from_fn(|j| base[p[j]].clone())).scale(&two);
            let sg = if sign > 0 { "+" } else { "-" };
            out.push((alloc::format!("2({uname},1,{sg}1) permuted {p:?}"), v));
        }
    }
    out
}

pub fn example2(cs: &CrossSpaces<'_>, u_is_s_bar: bool) -> ExampleCheck {
    let l = cs.space.lattice;
    let (vectors, classes) = check_vectors(l, &example2_vectors(u_is_s_bar));
    let span = Subspace::span(DIM, classes.iter().cloned());
    let pointwise = classes.iter().all(|c| cs.space.sigma.apply(c) == *c);
    let pair_types = if vectors.iter().all(|v| v.member) { pair_types_if_pure(l, &span) } else { None };
    ExampleCheck {
        rank: span.dim(),
        sigma_invariant: pointwise && !classes.is_empty(),
        orbit_size: pair_types.as_ref().filter(|_| span.dim() == 3 && pointwise).and_then(|p| cs.orbit_size_by_invariants(p, true)),
        pair_types,
        vectors,
    }
}

pub fn example3(cs: &CrossSpaces<'_>) -> ExampleCheck {
    let l = cs.space.lattice;
    let name = "(-2-i0+i3+i5+i6,2i4+i0+i3-i5+i6,0)";
    let (vectors, classes) = check_vectors(l, &[(String::from(name), quoted_vector(name))]);
    let span = match classes.first() {
        Some(c) => cs.space.sigma_span(c),
        None => Subspace::zero(DIM),
    };
    ExampleCheck {
        rank: span.dim(),
        sigma_invariant: span.is_invariant(&cs.space.sigma),
        orbit_size: classes.first().and_then(|c| cs.orbit_size_of_class(c)),
        pair_types: pair_types_if_pure(l, &span),
        vectors,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leech::octo::tests::lattice;

    #[test]
    fn orbits_and_examples() {
        let cs = cross_spaces(lattice()).unwrap();
        assert_eq!(cs.lines.len(), 73);
        assert_eq!(cs.group_order, 168);
        assert!(cs.all_type4);
        let st: Vec<(usize, u64, &str)> = cs.orbits.iter().map(|o| (o.size, o.stabilizer_order, o.stabilizer_type.as_str())).collect();
        assert_eq!(st, [(7, 24, "S4"), (24, 7, "C7"), (42, 4, "2^2")]);
        let sig: Vec<(PairCounts, bool)> = cs.orbits.iter().map(|o| (o.pair_types.clone(), o.pointwise_seven)).collect();
        let only = |t: PairType| PairCounts::from([(t, 21)]);
        assert_eq!(sig, [(only(PairType::A), false), (only(PairType::B), true), (only(PairType::B), false)]);
        let e1 = example1(&cs);
        assert!(e1.all_members_type4() && e1.sigma_invariant);
        assert_eq!((e1.rank, e1.orbit_size), (3, Some(7)));
        let e3 = example3(&cs);
        assert!(e3.all_members_type4() && e3.sigma_invariant);
        assert_eq!((e3.rank, e3.orbit_size), (3, Some(42)));
        let e2 = example2(&cs, false);
        assert!(e2.all_members_type4() && e2.sigma_invariant);
        assert_eq!((e2.rank, e2.orbit_size), (3, Some(24)));
        let printed = example2(&cs, true);
        assert!(!printed.all_members_type4());
        let ext = example1_extension(&cs).unwrap();
        assert_eq!(ext, TwoFive { rank: 5, totally_singular: true, second_vector_member: true, second_vector_orbit: Some(7) });
    }
}
