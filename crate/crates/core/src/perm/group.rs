use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

use super::Permutation;

const NONE: u32 = u32::MAX;
const ROOT: u32 = u32::MAX - 1;

/// Generators acting on `0..degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Self {
        assert!(gens.iter().all(|g| g.degree() == degree));
        PermGroup { degree, gens }
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup { degree, gens: Vec::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn bsgs(&self) -> Bsgs {
        Bsgs::build(self, &[])
    }

    pub fn order(&self) -> u64 {
        self.bsgs().order()
    }

    pub fn orbit_partition(&self) -> OrbitPartition {
        OrbitPartition::compute(self.degree, &self.gens)
    }
}

/// Orbits of a group on its points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    /// Orbit id of every point; ids follow the smallest point of each orbit.
    pub orbit_of: Vec<u32>,
    pub sizes: Vec<usize>,
}

impl OrbitPartition {
    pub fn compute(degree: usize, gens: &[Permutation]) -> Self {
        let mut orbit_of = vec![NONE; degree];
        let mut sizes = Vec::new();
        let mut queue = Vec::new();
        for start in 0..degree {
            if orbit_of[start] != NONE {
                continue;
            }
            let id = sizes.len() as u32;
            orbit_of[start] = id;
            queue.clear();
            queue.push(start as u32);
            let mut head = 0;
            while head < queue.len() {
                let p = queue[head] as usize;
                head += 1;
                for g in gens {
                    let q = g.image(p);
                    if orbit_of[q] == NONE {
                        orbit_of[q] = id;
                        queue.push(q as u32);
                    }
                }
            }
            sizes.push(queue.len());
        }
        OrbitPartition { orbit_of, sizes }
    }

    /// Orbit length -> number of orbits of that length.
    pub fn histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for &s in &self.sizes {
            *h.entry(s).or_insert(0) += 1;
        }
        h
    }

    /// True when every orbit is closed under every generator.
    pub fn is_closed_under(&self, gens: &[Permutation]) -> bool {
        gens.iter().all(|g| (0..self.orbit_of.len()).all(|p| self.orbit_of[p] == self.orbit_of[g.image(p)]))
    }
}

#[derive(Clone, Debug)]
struct Level {
    point: usize,
    gens: Vec<Permutation>,
    gens_inv: Vec<Permutation>,
    orbit: Vec<u32>,
    sv: Vec<u32>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Self {
        Level { point, gens: Vec::new(), gens_inv: Vec::new(), orbit: Vec::new(), sv: vec![NONE; degree] }
    }

    fn push_gen(&mut self, g: Permutation) {
        self.gens_inv.push(g.inv());
        self.gens.push(g);
    }

    fn recompute_orbit(&mut self) {
        for &p in &self.orbit {
            self.sv[p as usize] = NONE;
        }
        self.orbit.clear();
        self.sv[self.point] = ROOT;
        self.orbit.push(self.point as u32);
        let mut head = 0;
        while head < self.orbit.len() {
            let p = self.orbit[head] as usize;
            head += 1;
            for (k, g) in self.gens.iter().enumerate() {
                let q = g.image(p);
                if self.sv[q] == NONE {
                    self.sv[q] = k as u32;
                    self.orbit.push(q as u32);
                }
            }
        }
    }

    fn in_orbit(&self, p: usize) -> bool {
        self.sv[p] != NONE
    }

    /// `h * u_beta^-1` where `beta = point^h`.
    fn strip_one(&self, h: &Permutation) -> Option<Permutation> {
        let mut beta = h.image(self.point);
        if !self.in_orbit(beta) {
            return None;
        }
        let mut h = h.clone();
        while self.sv[beta] != ROOT {
            let k = self.sv[beta] as usize;
            h = h.mul(&self.gens_inv[k]);
            beta = self.gens_inv[k].image(beta);
        }
        Some(h)
    }

    /// Transversal element mapping the base point to `beta`.
    fn transversal(&self, beta: usize) -> Permutation {
        let mut word = Vec::new();
        let mut b = beta;
        while self.sv[b] != ROOT {
            let k = self.sv[b] as usize;
            word.push(k);
            b = self.gens_inv[k].image(b);
        }
        let mut u = Permutation::identity(self.sv.len());
        for &k in word.iter().rev() {
            u = u.mul(&self.gens[k]);
        }
        u
    }
}

/// Base and strong generating set with Schreier vectors.
#[derive(Clone, Debug)]
pub struct Bsgs {
    degree: usize,
    levels: Vec<Level>,
    orbit_size_hint: Vec<usize>,
}

impl Bsgs {
    /// Deterministic Schreier-Sims; `base_prefix` fixes the first base points.
    pub fn build(group: &PermGroup, base_prefix: &[usize]) -> Bsgs {
        let degree = group.degree();
        let part = group.orbit_partition();
        let orbit_size_hint = part.orbit_of.iter().map(|&o| part.sizes[o as usize]).collect();
        let mut b = Bsgs { degree, levels: Vec::new(), orbit_size_hint };
        for &p in base_prefix {
            b.levels.push(Level::new(p, degree));
        }
        let gens: Vec<Permutation> = group.gens().iter().filter(|g| !g.is_identity()).cloned().collect();
        for g in &gens {
            if b.levels.iter().all(|l| g.image(l.point) == l.point) {
                let p = b.choose_point(g);
                b.levels.push(Level::new(p, degree));
            }
        }
        for g in &gens {
            for l in 0..b.levels.len() {
                b.levels[l].push_gen(g.clone());
                if g.image(b.levels[l].point) != b.levels[l].point {
                    break;
                }
            }
        }
        for l in b.levels.iter_mut() {
            l.recompute_orbit();
        }
        b.complete();
        b
    }

    /// Moved point of `g` lying in the smallest orbit of the whole group.
    fn choose_point(&self, g: &Permutation) -> usize {
        (0..self.degree).filter(|&p| g.image(p) != p).min_by_key(|&p| (self.orbit_size_hint[p], p)).expect("identity has no moved point")
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let iu = i as usize;
            let mut restart = None;
            'scan: for oi in 0..self.levels[iu].orbit.len() {
                let beta = self.levels[iu].orbit[oi] as usize;
                let u_beta = self.levels[iu].transversal(beta);
                for si in 0..self.levels[iu].gens.len() {
                    let s = &self.levels[iu].gens[si];
                    let gamma = s.image(beta);
                    let h = u_beta.mul(s).mul(&self.levels[iu].transversal(gamma).inv());
                    if h.is_identity() {
                        continue;
                    }
                    let (y, j) = self.strip_from(&h, iu + 1);
                    if j < self.levels.len() || !y.is_identity() {
                        if j == self.levels.len() {
                            let p = self.choose_point(&y);
                            self.levels.push(Level::new(p, self.degree));
                        }
                        for l in iu + 1..=j {
                            self.levels[l].push_gen(y.clone());
                            self.levels[l].recompute_orbit();
                        }
                        restart = Some(j);
                        break 'scan;
                    }
                }
            }
            match restart {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
    }

    /// Sifts from level `start`; returns the residue and the level where it stopped.
    fn strip_from(&self, h: &Permutation, start: usize) -> (Permutation, usize) {
        let mut h = h.clone();
        for l in start..self.levels.len() {
            match self.levels[l].strip_one(&h) {
                Some(r) => h = r,
                None => return (h, l),
            }
        }
        (h, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn basic_orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u64 {
        self.levels.iter().map(|l| l.orbit.len() as u64).product()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (y, j) = self.strip_from(g, 0);
        j == self.levels.len() && y.is_identity()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Generators of the pointwise stabilizer of the first `k` base points.
    pub fn stabilizer_gens(&self, k: usize) -> Vec<Permutation> {
        if k >= self.levels.len() {
            return Vec::new();
        }
        self.levels[k].gens.clone()
    }

    fn transversals(&self) -> Vec<Vec<Permutation>> {
        self.levels.iter().map(|l| l.orbit.iter().map(|&b| l.transversal(b as usize)).collect()).collect()
    }

    /// Every element; use only for small groups.
    pub fn elements(&self) -> Vec<Permutation> {
        let ts = self.transversals();
        let mut out = vec![Permutation::identity(self.degree)];
        for t in ts.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * t.len());
            for g in &out {
                for u in t {
                    next.push(g.mul(u));
                }
            }
            out = next;
        }
        out
    }

    /// Visits every element without storing them.
    pub fn for_each_element(&self, mut f: impl FnMut(&Permutation)) {
        let ts = self.transversals();
        fn rec(ts: &[Vec<Permutation>], depth: usize, acc: &Permutation, f: &mut dyn FnMut(&Permutation)) {
            if depth == 0 {
                f(acc);
                return;
            }
            for u in &ts[depth - 1] {
                rec(ts, depth - 1, &acc.mul(u), f);
            }
        }
        rec(&ts, ts.len(), &Permutation::identity(self.degree), &mut f);
    }

    /// Uniformly random element from a seeded generator.
    pub fn random_element(&self, rng: &mut SmallRng) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for l in self.levels.iter().rev() {
            let b = l.orbit[rng.gen_range(0..l.orbit.len())] as usize;
            g = g.mul(&l.transversal(b));
        }
        g
    }
}

/// Seeded generator used by every randomized routine.
pub fn seeded_rng(seed: u64) -> SmallRng {
    SmallRng::seed_from_u64(seed)
}

/// Stabilizer of the object `obj` under an action of `group`, found from
/// Schreier generators of its orbit; also returns the orbit length.
pub fn object_stabilizer<T: Ord + Clone>(group: &PermGroup, obj: T, act: impl Fn(&T, &Permutation) -> T) -> (PermGroup, usize) {
    let bsgs = group.bsgs();
    let order = bsgs.order();
    let mut trans: BTreeMap<T, Permutation> = BTreeMap::new();
    let mut queue = VecDeque::new();
    trans.insert(obj.clone(), Permutation::identity(group.degree()));
    queue.push_back(obj);
    while let Some(o) = queue.pop_front() {
        let u = trans[&o].clone();
        for g in group.gens() {
            let img = act(&o, g);
            if !trans.contains_key(&img) {
                trans.insert(img.clone(), u.mul(g));
                queue.push_back(img);
            }
        }
    }
    let orbit_len = trans.len();
    let target = order / orbit_len as u64;
    let mut sub = PermGroup::trivial(group.degree());
    let mut sub_bsgs = sub.bsgs();
    'outer: for (o, u) in trans.iter() {
        for g in group.gens() {
            if sub_bsgs.order() == target {
                break 'outer;
            }
            let img = act(o, g);
            let h = u.mul(g).mul(&trans[&img].inv());
            if !h.is_identity() && !sub_bsgs.contains(&h) {
                sub.gens.push(h);
                sub_bsgs = sub.bsgs();
            }
        }
    }
    debug_assert_eq!(sub_bsgs.order(), target);
    (sub, orbit_len)
}

/// Pointwise stabilizer of one point.
pub fn point_stabilizer(group: &PermGroup, point: usize) -> PermGroup {
    let b = Bsgs::build(group, &[point]);
    PermGroup::new(group.degree(), b.stabilizer_gens(1))
}

/// Setwise stabilizer of a set of at most 64 points.
pub fn setwise_stabilizer(group: &PermGroup, mask: u64) -> PermGroup {
    assert!(group.degree() <= 64);
    object_stabilizer(group, mask, |m, g| g.image_mask(*m)).0
}

/// Draws up to `budget` random elements and keeps those of order exactly `k`.
pub fn elements_of_order(group: &PermGroup, k: u64, budget: usize, seed: u64) -> Vec<Permutation> {
    let b = group.bsgs();
    let mut rng = seeded_rng(seed);
    let mut out: Vec<Permutation> = Vec::new();
    for _ in 0..budget {
        let g = b.random_element(&mut rng);
        let o = g.order();
        if o.is_multiple_of(k) {
            let h = g.pow((o / k) as i64);
            if !out.contains(&h) {
                out.push(h);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> PermGroup {
        let c = Permutation::from_fn(n, |i| (i + 1) % n).unwrap();
        let t = Permutation::from_cycles(n, &[&[0, 1]]).unwrap();
        PermGroup::new(n, vec![c, t])
    }

    #[test]
    fn symmetric_orders() {
        assert_eq!(sym(4).order(), 24);
        assert_eq!(sym(7).order(), 5040);
        assert_eq!(PermGroup::trivial(5).order(), 1);
    }

    #[test]
    fn orbit_examples() {
        let g = PermGroup::new(4, vec![Permutation::from_cycles(4, &[&[0, 1, 2]]).unwrap()]);
        let p = g.orbit_partition();
        assert_eq!(p.sizes, vec![3, 1]);
        assert!(p.is_closed_under(g.gens()));
        let id = PermGroup::trivial(5).orbit_partition();
        assert_eq!(id.sizes, vec![1; 5]);
    }

    #[test]
    fn point_stabilizer_of_symmetric_group() {
        let g = sym(6);
        let h = point_stabilizer(&g, 2);
        assert_eq!(h.order(), 120);
        assert!(h.gens().iter().all(|x| x.image(2) == 2));
        let b = g.bsgs();
        assert!(h.gens().iter().all(|x| b.contains(x)));
    }

    #[test]
    fn setwise_stabilizer_order() {
        let g = sym(6);
        let h = setwise_stabilizer(&g, 0b000111);
        assert_eq!(h.order(), 36);
    }

    #[test]
    fn elements_enumeration_matches_order() {
        let g = sym(5);
        let b = g.bsgs();
        let els = b.elements();
        assert_eq!(els.len(), 120);
        let mut sorted = els.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 120);
        assert!(els.iter().all(|e| b.contains(e)));
    }

    #[test]
    fn no_element_of_order_four_in_s3() {
        let g = sym(3);
        let mut found = false;
        g.bsgs().for_each_element(|e| found |= e.order() == 4);
        assert!(!found);
        let sevens = elements_of_order(&sym(7), 7, 200, 1);
        assert!(!sevens.is_empty());
        assert!(sevens.iter().all(|g| g.order() == 7));
    }

    #[test]
    fn order_independent_of_base() {
        let g = sym(6);
        let a = Bsgs::build(&g, &[]);
        let b = Bsgs::build(&g, &[5, 3]);
        assert_eq!(a.order(), b.order());
        assert_eq!(b.base()[..2], [5, 3]);
    }
}
