use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use super::module::F2GModule;
use crate::error::{Error, Result};
use crate::exact::{F2Matrix, F2Vec};
use crate::perm::finite::FiniteGroup;

/// An elementary abelian section A/B with F2 coordinates.
#[derive(Clone, Debug)]
pub struct Section<E> {
    below: BTreeSet<E>,
    basis: Vec<E>,
    coords: BTreeMap<E, u64>,
}

impl<E: Clone + Ord + core::fmt::Debug> Section<E> {
    /// `a` and `b` are subgroups with `b` normal in `a` and `a/b` elementary abelian.
    pub fn new<G: FiniteGroup<Elem = E> + ?Sized>(g: &G, a: &BTreeSet<E>, b: &BTreeSet<E>) -> Result<Self> {
        if !b.is_subset(a) || !a.len().is_multiple_of(b.len()) {
            return Err(Error::Module(String::from("not a subgroup chain")));
        }
        for x in a {
            if !b.contains(&g.mul(x, x)) {
                return Err(Error::Module(String::from("section is not of exponent 2")));
            }
        }
        let key = |x: &E| b.iter().map(|z| g.mul(x, z)).min().unwrap();
        let mut coords: BTreeMap<E, u64> = BTreeMap::new();
        coords.insert(key(&g.identity()), 0);
        let mut basis = Vec::new();
        for x in a {
            let k = key(x);
            if coords.contains_key(&k) {
                continue;
            }
            let bit = 1u64 << basis.len();
            basis.push(k.clone());
            let old: Vec<(E, u64)> = coords.iter().map(|(e, c)| (e.clone(), *c)).collect();
            for (e, c) in old {
                let prod = key(&g.mul(&e, &k));
                if coords.insert(prod, c | bit).is_some() {
                    return Err(Error::Module(String::from("section is not abelian")));
                }
            }
        }
        if coords.len() * b.len() != a.len() {
            return Err(Error::Module(String::from("section cosets do not match the index")));
        }
        Ok(Section { below: b.clone(), basis, coords })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[E] {
        &self.basis
    }

    /// Coordinates of `x` modulo the lower subgroup.
    pub fn coords<G: FiniteGroup<Elem = E> + ?Sized>(&self, g: &G, x: &E) -> Option<F2Vec> {
        let k = self.below.iter().map(|z| g.mul(x, z)).min().unwrap();
        self.coords.get(&k).map(|&c| F2Vec::from_u64(self.dim(), c))
    }

    /// Module for conjugation `v -> y^-1 v y` by each element of `acting`.
    pub fn conjugation_module<G: FiniteGroup<Elem = E> + ?Sized>(&self, g: &G, acting: &[E]) -> Result<F2GModule> {
        let d = self.dim();
        let mut gens = Vec::new();
        for y in acting {
            let mut rows = Vec::with_capacity(d);
            for b in &self.basis {
                let img = g.conj(b, y);
                rows.push(self.coords(g, &img).ok_or_else(|| Error::Module(String::from("section not normalized")))?);
            }
            gens.push(F2Matrix::from_rows(d, rows));
        }
        Ok(F2GModule::new(d, gens))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep::module::C7Label;
    use crate::perm::finite::PermGroupElems;
    use crate::perm::search::agl18;

    #[test]
    fn agl18_translations_are_irreducible_cubic() {
        let g = PermGroupElems::new(agl18());
        let found = crate::perm::search::find_2cubed_normalized_by_7(&g, 100).unwrap();
        let e = &found[0].e;
        let one: BTreeSet<_> = [g.identity()].into_iter().collect();
        let sec = Section::new(&g, e, &one).unwrap();
        assert_eq!(sec.dim(), 3);
        let m = sec.conjugation_module(&g, core::slice::from_ref(&found[0].x)).unwrap();
        let label = m.c7_label().unwrap();
        // inverting x swaps the two cubic types
        let mi = sec.conjugation_module(&g, &[found[0].x.inv()]).unwrap();
        let li = mi.c7_label().unwrap();
        assert_ne!(label, C7Label::One);
        assert_ne!(label, li);
    }
}
