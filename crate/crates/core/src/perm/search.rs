//! Exhaustive subgroup searches in small groups.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use super::finite::{closure, conjugacy_classes_of_subgroups, is_elementary_abelian, FiniteGroup};
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};
use crate::suzuki::is_suzuki_2group;

/// Order-7 subgroups of `els`, each as its element set, with one generator.
pub fn subgroups_of_order7<G: FiniteGroup + ?Sized>(g: &G, els: &[G::Elem]) -> Vec<(BTreeSet<G::Elem>, G::Elem)> {
    let mut seen: BTreeSet<BTreeSet<G::Elem>> = BTreeSet::new();
    let mut out = Vec::new();
    for x in els.iter().filter(|x| g.elem_order(x) == 7) {
        let s = closure(g, core::slice::from_ref(x), 7).expect("cyclic of order 7");
        if seen.insert(s.clone()) {
            out.push((s, x.clone()));
        }
    }
    out
}

/// Elementary abelian 2^3 subgroups normalized by `x` (order 7) and
/// acting nontrivially: every such E is spanned by the conjugates of any
/// one of its involutions.
pub fn twocubes_normalized_by<G: FiniteGroup + ?Sized>(g: &G, x: &G::Elem, involutions: &[G::Elem]) -> BTreeSet<BTreeSet<G::Elem>> {
    let mut found = BTreeSet::new();
    for t in involutions {
        let mut conj = Vec::with_capacity(7);
        let mut c = t.clone();
        for _ in 0..7 {
            conj.push(c.clone());
            c = g.conj(&c, x);
        }
        if !conj.iter().all(|a| conj.iter().all(|b| g.commute(a, b))) {
            continue;
        }
        if let Some(e) = closure(g, &conj, 8) {
            if e.len() == 8 && is_elementary_abelian(g, &e) {
                found.insert(e);
            }
        }
    }
    found
}

/// One conjugacy class of pairs (E, <x>) found by the 2^3:7 search.
#[derive(Clone, Debug)]
pub struct TwoCubedSevenClass<E> {
    pub seven_class_size: usize,
    pub x: E,
    pub e: BTreeSet<E>,
    /// Number of E normalized by this particular <x>.
    pub e_count_for_x: usize,
}

/// All (E, <x>) with E = 2^3 and x of order 7 acting nontrivially on E,
/// up to conjugacy. An empty list certifies that the group has no 2^3:7.
pub fn find_2cubed_normalized_by_7<G: FiniteGroup + ?Sized>(g: &G, size_guard: usize) -> Result<Vec<TwoCubedSevenClass<G::Elem>>> {
    let els = g.elements();
    if els.len() > size_guard {
        return Err(Error::SizeGuard(format!("{} elements", els.len())));
    }
    let involutions: Vec<G::Elem> = els.iter().filter(|a| g.elem_order(a) == 2).cloned().collect();
    let sevens = subgroups_of_order7(g, &els);
    let sets: Vec<BTreeSet<G::Elem>> = sevens.iter().map(|(s, _)| s.clone()).collect();
    let classes = conjugacy_classes_of_subgroups(g, &sets);
    let mut out = Vec::new();
    for class in classes {
        let (s, x) = &sevens[class[0]];
        let es = twocubes_normalized_by(g, x, &involutions);
        if es.is_empty() {
            continue;
        }
        // reduce modulo the normalizer of <x>
        let norm: Vec<&G::Elem> = els.iter().filter(|n| s.contains(&g.conj(x, n))).collect();
        let mut left: BTreeSet<BTreeSet<G::Elem>> = es.clone();
        while let Some(e) = left.iter().next().cloned() {
            for n in &norm {
                let img: BTreeSet<G::Elem> = e.iter().map(|a| g.conj(a, n)).collect();
                left.remove(&img);
            }
            out.push(TwoCubedSevenClass { seven_class_size: class.len(), x: x.clone(), e, e_count_for_x: es.len() });
        }
    }
    Ok(out)
}

/// A subgroup P:<y> with P a Suzuki 2-group of order 64.
#[derive(Clone, Debug)]
pub struct BorelCopy<E> {
    pub y: E,
    pub p: BTreeSet<E>,
}

/// Exhaustive search for 2^{3+3}:7. For every class of order-7 subgroups
/// <y> and every element a of order 4, tests whether the conjugates of a
/// under y generate a Suzuki 2-group of order 64; any such P is spanned
/// this way by each of its elements outside Z(P).
pub fn find_b_subgroup<G: FiniteGroup + ?Sized>(g: &G, size_guard: usize) -> Result<Vec<BorelCopy<G::Elem>>> {
    let els = g.elements();
    if els.len() > size_guard {
        return Err(Error::SizeGuard(format!("{} elements", els.len())));
    }
    let order4: Vec<&G::Elem> = els.iter().filter(|a| g.elem_order(a) == 4).collect();
    let sevens = subgroups_of_order7(g, &els);
    let sets: Vec<BTreeSet<G::Elem>> = sevens.iter().map(|(s, _)| s.clone()).collect();
    let classes = conjugacy_classes_of_subgroups(g, &sets);
    let mut out: Vec<BorelCopy<G::Elem>> = Vec::new();
    for class in classes {
        let y = &sevens[class[0]].1;
        for a in &order4 {
            let mut conj = Vec::with_capacity(7);
            let mut c = (*a).clone();
            for _ in 0..7 {
                conj.push(c.clone());
                c = g.conj(&c, y);
            }
            let Some(p) = closure(g, &conj, 64) else { continue };
            if p.len() == 64 && is_suzuki_2group(g, &p) && !out.iter().any(|b| b.p == p) {
                out.push(BorelCopy { y: y.clone(), p });
            }
        }
    }
    Ok(out)
}

/// Elementary abelian 2^3 subgroups all of whose involutions satisfy
/// `allowed`, each returned as its sorted set of 7 involutions.
pub fn pure_2cubed_check<G: FiniteGroup + ?Sized>(g: &G, involutions: &[G::Elem], allowed: impl Fn(&G::Elem) -> bool) -> Vec<BTreeSet<G::Elem>> {
    let inv: Vec<&G::Elem> = involutions.iter().filter(|a| allowed(a)).collect();
    let set: BTreeSet<&G::Elem> = inv.iter().copied().collect();
    let ok = |a: &G::Elem| set.contains(a);
    let mut found: BTreeSet<BTreeSet<G::Elem>> = BTreeSet::new();
    for i in 0..inv.len() {
        let a = inv[i];
        let partners: Vec<usize> = (i + 1..inv.len()).filter(|&j| g.commute(a, inv[j]) && ok(&g.mul(a, inv[j]))).collect();
        for (pi, &j) in partners.iter().enumerate() {
            let b = inv[j];
            let ab = g.mul(a, b);
            for &k in &partners[pi + 1..] {
                let c = inv[k];
                if !g.commute(b, c) {
                    continue;
                }
                let bc = g.mul(b, c);
                if c == &ab || !ok(&bc) {
                    continue;
                }
                let ac = g.mul(a, c);
                let abc = g.mul(&ab, c);
                if ok(&ac) && ok(&abc) {
                    let s: BTreeSet<G::Elem> = [a.clone(), b.clone(), c.clone(), ab.clone(), ac, bc, abc].into_iter().collect();
                    if s.len() == 7 {
                        found.insert(s);
                    }
                }
            }
        }
    }
    found.into_iter().collect()
}

/// AGL(1,8): x -> a x + b on F8 as permutations of 8 points.
pub fn agl18() -> PermGroup {
    use crate::exact::F8;
    let f = |a: F8, b: F8| Permutation::from_fn(8, |i| (a * F8::new(i as u8) + b).bits() as usize).expect("affine map is a bijection");
    PermGroup::new(8, alloc::vec![f(F8::ETA, F8::ZERO), f(F8::ONE, F8::ONE)])
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::perm::finite::PermGroupElems;

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
    fn two_to_the_four_has_fifteen_2cubes() {
        let g = Elem2(4);
        let invs: Vec<u32> = (1..16).collect();
        assert_eq!(pure_2cubed_check(&g, &invs, |_| true).len(), 15);
        assert_eq!(pure_2cubed_check(&g, &invs, |&a| a != 1).len(), 8);
    }

    #[test]
    fn agl18_has_one_class() {
        let g = PermGroupElems::new(agl18());
        let found = find_2cubed_normalized_by_7(&g, 1000).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].e_count_for_x, 1);
    }

    #[test]
    fn s4_has_none() {
        let c = Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        let t = Permutation::from_cycles(4, &[&[0, 1]]).unwrap();
        let g = PermGroupElems::new(PermGroup::new(4, alloc::vec![c, t]));
        assert!(find_2cubed_normalized_by_7(&g, 1000).unwrap().is_empty());
        assert!(find_b_subgroup(&g, 1000).unwrap().is_empty());
    }
}
