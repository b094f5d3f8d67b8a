use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::module::F2GModule;
use crate::exact::{F2Matrix, F2Vec};
use crate::perm::finite::FiniteGroup;

/// Multiplication table of a listed group; element 0 is the identity.
#[derive(Clone, Debug)]
pub struct GroupTable {
    n: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    gens: Vec<usize>,
}

impl GroupTable {
    /// Table of the group generated by `gens`, with the elements returned
    /// in table order.
    pub fn build<G: FiniteGroup + ?Sized>(g: &G, gens: &[G::Elem]) -> (GroupTable, Vec<G::Elem>) {
        let id = g.identity();
        let rest = super::super::perm::finite::closure(g, gens, usize::MAX).unwrap();
        let mut els = alloc::vec![id.clone()];
        els.extend(rest.into_iter().filter(|e| *e != id));
        assert!(els.len() < u16::MAX as usize);
        let index: BTreeMap<&G::Elem, usize> = els.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let n = els.len();
        let mut mul = alloc::vec![0u16; n * n];
        for (i, a) in els.iter().enumerate() {
            for (j, b) in els.iter().enumerate() {
                mul[i * n + j] = index[&g.mul(a, b)] as u16;
            }
        }
        let inv = (0..n).map(|i| (0..n).find(|&j| mul[i * n + j] == 0).unwrap() as u16).collect();
        let gens = gens.iter().map(|s| index[s]).collect();
        (GroupTable { n, mul, inv, gens }, els)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    /// Matrices for every element from the generator matrices of `m`.
    pub fn element_matrices(&self, m: &F2GModule) -> Vec<F2Matrix> {
        assert_eq!(m.gens().len(), self.gens.len());
        let mut out: Vec<Option<F2Matrix>> = alloc::vec![None; self.n];
        out[0] = Some(F2Matrix::identity(m.dim()));
        let mut queue = alloc::vec![0usize];
        while let Some(a) = queue.pop() {
            for (k, &s) in self.gens.iter().enumerate() {
                let b = self.mul(a, s);
                if out[b].is_none() {
                    out[b] = Some(out[a].as_ref().unwrap().mul(&m.gens()[k]));
                    queue.push(b);
                }
            }
        }
        out.into_iter().map(|x| x.expect("generators generate")).collect()
    }

    /// Whether `m` is a representation: generator relations hold on the table.
    pub fn is_representation(&self, m: &F2GModule) -> bool {
        let mats = self.element_matrices(m);
        (0..self.n).all(|a| (0..self.n).all(|b| mats[self.mul(a, b)] == mats[a].mul(&mats[b])))
    }
}

/// H^1(G, Hom(A, B)) computed from cocycles on the full element list.
#[derive(Clone, Debug)]
pub struct Ext1 {
    pub dim: usize,
    pub cocycle_dim: usize,
    pub coboundary_dim: usize,
    /// A cocycle that is not a coboundary, as one matrix per element.
    pub witness: Option<Vec<F2Matrix>>,
}

fn mat_to_vec(m: &F2Matrix) -> F2Vec {
    let mut v = F2Vec::zero(m.n_rows() * m.n_cols());
    for i in 0..m.n_rows() {
        for j in m.row(i).ones() {
            v.set(i * m.n_cols() + j, true);
        }
    }
    v
}

fn vec_to_mat(v: &F2Vec, rows: usize, cols: usize) -> F2Matrix {
    F2Matrix::from_rows(cols, (0..rows).map(|i| v.slice(i * cols, (i + 1) * cols)).collect())
}

/// Ext^1 with `b` as submodule and `a` as quotient. A cocycle f gives the
/// extension with block matrices `[[A_g, A_g f(g)], [0, B_g]]`.
pub fn ext1(t: &GroupTable, a: &F2GModule, b: &F2GModule) -> Ext1 {
    let (da, db) = (a.dim(), b.dim());
    let hd = da * db;
    let am = t.element_matrices(a);
    let ainv: Vec<F2Matrix> = (0..t.order()).map(|g| am[t.inv(g)].clone()).collect();
    let bm = t.element_matrices(b);
    let n = t.order();
    let unknowns = n * hd;
    // the action f -> A_h^-1 f B_h as a linear map on Hom, for each generator
    let act = |h: usize| -> F2Matrix {
        let rows = (0..hd)
            .map(|k| {
                let e = vec_to_mat(&F2Vec::unit(hd, k), da, db);
                mat_to_vec(&ainv[h].mul(&e).mul(&bm[h]))
            })
            .collect();
        F2Matrix::from_rows(hd, rows)
    };
    let gen_act: Vec<F2Matrix> = t.gens().iter().map(|&s| act(s)).collect();
    // equations f(gs) + f(g).s + f(s) = 0 for all g and generators s
    let mut eqs: Vec<F2Vec> = Vec::new();
    for g in 0..n {
        for (k, &s) in t.gens().iter().enumerate() {
            let gs = t.mul(g, s);
            for c in 0..hd {
                let mut e = F2Vec::zero(unknowns);
                e.flip(gs * hd + c);
                e.flip(s * hd + c);
                for r in 0..hd {
                    if gen_act[k].get(r, c) {
                        e.flip(g * hd + r);
                    }
                }
                eqs.push(e);
            }
        }
    }
    let z1 = F2Matrix::from_rows(unknowns, eqs).transpose().left_kernel();
    // coboundaries g -> m.g + m; their span has dim Hom - dim Hom^G
    let all_act: Vec<F2Matrix> = (0..n).map(act).collect();
    let fixed_eqs: Vec<F2Vec> = (0..hd)
        .flat_map(|c| {
            gen_act.iter().map(move |m| {
                let mut e = F2Vec::zero(hd);
                for r in 0..hd {
                    if m.get(r, c) ^ (r == c) {
                        e.flip(r);
                    }
                }
                e
            })
        })
        .collect();
    let fixed_dim = F2Matrix::from_rows(hd, fixed_eqs).transpose().left_kernel().len();
    let coboundary_dim = hd - fixed_dim;
    let mut bspace = crate::exact::Subspace::zero(unknowns);
    for k in 0..hd {
        let mvec = F2Vec::unit(hd, k);
        let mut f = F2Vec::zero(unknowns);
        for g in 0..n {
            let img = all_act[g].apply(&mvec).xor(&mvec);
            for j in img.ones() {
                f.set(g * hd + j, true);
            }
        }
        bspace.insert(f);
    }
    debug_assert_eq!(bspace.dim(), coboundary_dim);
    let witness =
        z1.iter().find(|z| !bspace.contains(z)).map(|z| (0..n).map(|g| vec_to_mat(&z.slice(g * hd, (g + 1) * hd), da, db)).collect::<Vec<_>>());
    Ext1 { dim: z1.len() - coboundary_dim, cocycle_dim: z1.len(), coboundary_dim, witness }
}

/// The extension module of a cocycle (from [`ext1`]), on `B + A` with
/// coordinates `(a, b)` where `b` spans the submodule.
pub fn extension_module(t: &GroupTable, a: &F2GModule, b: &F2GModule, cocycle: &[F2Matrix]) -> F2GModule {
    let (da, db) = (a.dim(), b.dim());
    let n = da + db;
    let gens = t
        .gens()
        .iter()
        .enumerate()
        .map(|(k, &s)| {
            let ag = &a.gens()[k];
            let c = ag.mul(&cocycle[s]);
            let mut m = F2Matrix::zero(n, n);
            for i in 0..da {
                for j in ag.row(i).ones() {
                    m.set(i, j, true);
                }
                for j in c.row(i).ones() {
                    m.set(i, da + j, true);
                }
            }
            for i in 0..db {
                for j in b.gens()[k].row(i).ones() {
                    m.set(da + i, da + j, true);
                }
            }
            m
        })
        .collect();
    F2GModule::new(n, gens)
}

/// Semidirect product V:K with `(k, v)(l, w) = (kl, v^l + w)`.
#[derive(Clone, Debug)]
pub struct Semidirect {
    table: GroupTable,
    mats: Vec<F2Matrix>,
    dim: usize,
}

impl Semidirect {
    pub fn new(table: GroupTable, module: &F2GModule) -> Self {
        assert!(module.dim() <= 32);
        let mats = table.element_matrices(module);
        Semidirect { table, mats, dim: module.dim() }
    }

    pub fn order(&self) -> usize {
        self.table.order() << self.dim
    }

    fn act(&self, v: u32, k: usize) -> u32 {
        self.mats[k].apply(&F2Vec::from_u64(self.dim, v as u64)).to_u64() as u32
    }

    /// The normal subgroup V.
    pub fn translations(&self) -> BTreeSet<(u16, u32)> {
        (0..1u32 << self.dim).map(|v| (0, v)).collect()
    }
}

impl FiniteGroup for Semidirect {
    type Elem = (u16, u32);
    fn identity(&self) -> (u16, u32) {
        (0, 0)
    }
    fn mul(&self, a: &(u16, u32), b: &(u16, u32)) -> (u16, u32) {
        (self.table.mul(a.0 as usize, b.0 as usize) as u16, self.act(a.1, b.0 as usize) ^ b.1)
    }
    fn inv(&self, a: &(u16, u32)) -> (u16, u32) {
        let ki = self.table.inv(a.0 as usize);
        (ki as u16, self.act(a.1, ki))
    }
    fn generators(&self) -> Vec<(u16, u32)> {
        let mut g: Vec<(u16, u32)> = self.table.gens().iter().map(|&s| (s as u16, 0)).collect();
        g.extend((0..self.dim).map(|i| (0, 1u32 << i)));
        g
    }
}
