//! Generic helpers for small groups given by a multiplication.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt::Debug;

use super::{Bsgs, PermGroup, Permutation};

/// A finite group small enough to list.
pub trait FiniteGroup {
    type Elem: Clone + Ord + Debug;
    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn generators(&self) -> Vec<Self::Elem>;

    fn elements(&self) -> Vec<Self::Elem> {
        closure(self, &self.generators(), usize::MAX).expect("no cap").into_iter().collect()
    }

    fn is_identity(&self, a: &Self::Elem) -> bool {
        *a == self.identity()
    }

    fn elem_order(&self, a: &Self::Elem) -> u64 {
        let id = self.identity();
        let mut p = a.clone();
        let mut k = 1;
        while p != id {
            p = self.mul(&p, a);
            k += 1;
        }
        k
    }

    /// `g^-1 a g`.
    fn conj(&self, a: &Self::Elem, g: &Self::Elem) -> Self::Elem {
        self.mul(&self.mul(&self.inv(g), a), g)
    }

    fn pow(&self, a: &Self::Elem, k: u64) -> Self::Elem {
        let mut acc = self.identity();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    fn commute(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }
}

/// Subgroup generated by `gens`; `None` once it exceeds `cap` elements.
pub fn closure<G: FiniteGroup + ?Sized>(g: &G, gens: &[G::Elem], cap: usize) -> Option<BTreeSet<G::Elem>> {
    let mut set = BTreeSet::new();
    let id = g.identity();
    set.insert(id.clone());
    let mut frontier = alloc::vec![id];
    while let Some(x) = frontier.pop() {
        for s in gens {
            let y = g.mul(&x, s);
            if set.insert(y.clone()) {
                if set.len() > cap {
                    return None;
                }
                frontier.push(y);
            }
        }
    }
    Some(set)
}

pub fn is_elementary_abelian<G: FiniteGroup + ?Sized>(g: &G, els: &BTreeSet<G::Elem>) -> bool {
    let v: Vec<&G::Elem> = els.iter().collect();
    v.iter().all(|a| g.is_identity(&g.mul(a, a))) && v.iter().all(|a| v.iter().all(|b| g.commute(a, b)))
}

pub fn center<G: FiniteGroup + ?Sized>(g: &G, els: &BTreeSet<G::Elem>) -> BTreeSet<G::Elem> {
    els.iter().filter(|a| els.iter().all(|b| g.commute(a, b))).cloned().collect()
}

/// Commutator subgroup of the subgroup `els`.
pub fn derived<G: FiniteGroup + ?Sized>(g: &G, els: &BTreeSet<G::Elem>) -> BTreeSet<G::Elem> {
    let mut comms = BTreeSet::new();
    for a in els {
        for b in els {
            let c = g.mul(&g.mul(&g.inv(a), &g.inv(b)), &g.mul(a, b));
            comms.insert(c);
        }
    }
    let gens: Vec<G::Elem> = comms.into_iter().collect();
    closure(g, &gens, usize::MAX).unwrap()
}

/// Frattini subgroup of a 2-group: generated by squares and commutators.
pub fn frattini_2group<G: FiniteGroup + ?Sized>(g: &G, els: &BTreeSet<G::Elem>) -> BTreeSet<G::Elem> {
    let mut gens: Vec<G::Elem> = derived(g, els).into_iter().collect();
    gens.extend(els.iter().map(|a| g.mul(a, a)));
    closure(g, &gens, usize::MAX).unwrap()
}

pub fn exponent<G: FiniteGroup + ?Sized>(g: &G, els: &BTreeSet<G::Elem>) -> u64 {
    els.iter().map(|a| g.elem_order(a)).fold(1, num_integer::lcm)
}

/// Orbits of the subgroups in `subs` under conjugation by the generators.
pub fn conjugacy_classes_of_subgroups<G: FiniteGroup + ?Sized>(g: &G, subs: &[BTreeSet<G::Elem>]) -> Vec<Vec<usize>> {
    let index: BTreeMap<&BTreeSet<G::Elem>, usize> = subs.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let gens = g.generators();
    let mut class_of = alloc::vec![usize::MAX; subs.len()];
    let mut classes = Vec::new();
    for start in 0..subs.len() {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        class_of[start] = id;
        let mut members = alloc::vec![start];
        let mut head = 0;
        while head < members.len() {
            let s = &subs[members[head]];
            head += 1;
            for x in &gens {
                let img: BTreeSet<G::Elem> = s.iter().map(|a| g.conj(a, x)).collect();
                let j = *index.get(&img).expect("conjugate subgroup missing from the list");
                if class_of[j] == usize::MAX {
                    class_of[j] = id;
                    members.push(j);
                }
            }
        }
        classes.push(members);
    }
    classes
}

/// A permutation group viewed as a listable group.
#[derive(Clone, Debug)]
pub struct PermGroupElems {
    group: PermGroup,
    bsgs: Bsgs,
}

impl PermGroupElems {
    pub fn new(group: PermGroup) -> Self {
        let bsgs = group.bsgs();
        PermGroupElems { group, bsgs }
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn bsgs(&self) -> &Bsgs {
        &self.bsgs
    }
}

impl FiniteGroup for PermGroupElems {
    type Elem = Permutation;
    fn identity(&self) -> Permutation {
        Permutation::identity(self.group.degree())
    }
    fn mul(&self, a: &Permutation, b: &Permutation) -> Permutation {
        a.mul(b)
    }
    fn inv(&self, a: &Permutation) -> Permutation {
        a.inv()
    }
    fn generators(&self) -> Vec<Permutation> {
        self.group.gens().to_vec()
    }
    fn elements(&self) -> Vec<Permutation> {
        self.bsgs.elements()
    }
    fn elem_order(&self, a: &Permutation) -> u64 {
        a.order()
    }
}

/// 2x2 matrices over F_p with determinant one, entries `[a, b, c, d]`.
#[derive(Clone, Debug)]
pub struct Sl2 {
    pub p: u8,
}

impl FiniteGroup for Sl2 {
    type Elem = [u8; 4];
    fn identity(&self) -> [u8; 4] {
        [1, 0, 0, 1]
    }
    fn mul(&self, x: &[u8; 4], y: &[u8; 4]) -> [u8; 4] {
        let p = self.p as u32;
        let m = |a: u8, b: u8, c: u8, d: u8| ((a as u32 * b as u32 + c as u32 * d as u32) % p) as u8;
        [m(x[0], y[0], x[1], y[2]), m(x[0], y[1], x[1], y[3]), m(x[2], y[0], x[3], y[2]), m(x[2], y[1], x[3], y[3])]
    }
    fn inv(&self, x: &[u8; 4]) -> [u8; 4] {
        let p = self.p;
        let neg = |a: u8| (p - a) % p;
        [x[3], neg(x[1]), neg(x[2]), x[0]]
    }
    fn generators(&self) -> Vec<[u8; 4]> {
        alloc::vec![[1, 1, 0, 1], [1, 0, 1, 1]]
    }
}

/// Facts about the Sylow 2-subgroup needed for the 7^2 case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniqueInvolutionFact {
    pub group_order: usize,
    pub sylow2_order: usize,
    pub involutions_in_sylow2: usize,
    pub is_quaternion: bool,
    pub has_klein_four: bool,
}

/// Involutions of a listed subgroup, and whether two of them commute.
pub fn klein_four_check<G: FiniteGroup + ?Sized>(g: &G, els: &BTreeSet<G::Elem>) -> (usize, bool) {
    let invs: Vec<&G::Elem> = els.iter().filter(|a| !g.is_identity(a) && g.is_identity(&g.mul(a, a))).collect();
    let mut has = false;
    for i in 0..invs.len() {
        for j in i + 1..invs.len() {
            has |= g.commute(invs[i], invs[j]);
        }
    }
    (invs.len(), has)
}

/// Quaternion test for a group of order 8 given by its elements.
pub fn is_quaternion8<G: FiniteGroup + ?Sized>(g: &G, els: &BTreeSet<G::Elem>) -> bool {
    if els.len() != 8 {
        return false;
    }
    let (invs, _) = klein_four_check(g, els);
    let order4 = els.iter().filter(|a| g.elem_order(a) == 4).count();
    invs == 1 && order4 == 6
}

/// SL(2,3): its Sylow 2-subgroup is Q8, which has one involution and so no 2^2.
pub fn quaternion_sylow_rank_fact() -> UniqueInvolutionFact {
    let g = Sl2 { p: 3 };
    let els: BTreeSet<[u8; 4]> = g.elements().into_iter().collect();
    let sylow: BTreeSet<[u8; 4]> = els.iter().filter(|a| g.elem_order(a).is_power_of_two()).cloned().collect();
    let sylow = closure(&g, &sylow.into_iter().collect::<Vec<_>>(), 64).expect("bounded");
    let (invs, has) = klein_four_check(&g, &sylow);
    UniqueInvolutionFact {
        group_order: els.len(),
        sylow2_order: sylow.len(),
        involutions_in_sylow2: invs,
        is_quaternion: is_quaternion8(&g, &sylow),
        has_klein_four: has,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// (Z/2)^n under xor.
    struct Elem2(u32);
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
            (0..self.0).map(|i| 1 << i).collect()
        }
    }

    #[test]
    fn sl23_sylow_is_quaternion() {
        let f = quaternion_sylow_rank_fact();
        assert_eq!(f.group_order, 24);
        assert_eq!(f.sylow2_order, 8);
        assert_eq!(f.involutions_in_sylow2, 1);
        assert!(f.is_quaternion);
        assert!(!f.has_klein_four);
    }

    #[test]
    fn klein_four_negative_control() {
        let g = Elem2(2);
        let els: BTreeSet<u32> = g.elements().into_iter().collect();
        assert_eq!(klein_four_check(&g, &els), (3, true));
        assert!(is_elementary_abelian(&g, &els));
        assert!(!is_quaternion8(&g, &els));
    }

    #[test]
    fn closure_cap() {
        let g = Elem2(5);
        assert!(closure(&g, &g.generators(), 16).is_none());
        assert_eq!(closure(&g, &g.generators(), 32).unwrap().len(), 32);
    }
}
