use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact::poly2::{self, CUBIC_A, CUBIC_B, X_PLUS_1};
use crate::exact::{F2Matrix, F2Vec, Quotient, Subspace};

/// F2-module given by one matrix per group generator (row vectors, `v * A`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2GModule {
    dim: usize,
    gens: Vec<F2Matrix>,
}

/// Irreducible F2[C7]-module types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum C7Label {
    /// trivial
    One,
    /// kernel of x^3 + x + 1
    CubicA,
    /// kernel of x^3 + x^2 + 1
    CubicB,
}

impl C7Label {
    pub fn poly(self) -> u64 {
        match self {
            C7Label::One => X_PLUS_1,
            C7Label::CubicA => CUBIC_A,
            C7Label::CubicB => CUBIC_B,
        }
    }

    pub fn dim(self) -> usize {
        match self {
            C7Label::One => 1,
            _ => 3,
        }
    }
}

/// Isotypic decomposition of a C7-module.
#[derive(Clone, Debug)]
pub struct Isotypic {
    /// multiplicities of (1, x^3+x+1, x^3+x^2+1)
    pub multiplicities: [usize; 3],
    pub parts: [Subspace; 3],
    /// projections onto the parts along the other two
    pub projections: [F2Matrix; 3],
}

/// p(M) for a polynomial packed into bits.
pub fn poly_eval(p: u64, m: &F2Matrix) -> F2Matrix {
    let n = m.n_cols();
    let mut acc = F2Matrix::zero(n, n);
    let mut pw = F2Matrix::identity(n);
    let deg = poly2::degree(p).unwrap_or(0);
    for i in 0..=deg {
        if p >> i & 1 == 1 {
            acc = acc.add(&pw);
        }
        pw = pw.mul(m);
    }
    acc
}

impl F2GModule {
    pub fn new(dim: usize, gens: Vec<F2Matrix>) -> Self {
        assert!(gens.iter().all(|g| g.n_rows() == dim && g.n_cols() == dim));
        F2GModule { dim, gens }
    }

    pub fn trivial(dim: usize, n_gens: usize) -> Self {
        F2GModule { dim, gens: alloc::vec![F2Matrix::identity(dim); n_gens] }
    }

    /// The C7-module whose generator is the companion matrix of `label`.
    pub fn c7_irreducible(label: C7Label) -> Self {
        let p = label.poly();
        let d = label.dim();
        let mut m = F2Matrix::zero(d, d);
        for i in 0..d - 1 {
            m.set(i, i + 1, true);
        }
        for j in 0..d {
            if p >> j & 1 == 1 {
                m.set(d - 1, j, true);
            }
        }
        if d == 1 {
            m = F2Matrix::identity(1);
        }
        F2GModule::new(d, alloc::vec![m])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[F2Matrix] {
        &self.gens
    }

    /// Smallest submodule containing `vs`.
    pub fn spin(&self, vs: impl IntoIterator<Item = F2Vec>) -> Subspace {
        let mut s = Subspace::zero(self.dim);
        let mut queue: Vec<F2Vec> = Vec::new();
        for v in vs {
            if s.insert(v.clone()) {
                queue.push(v);
            }
        }
        while let Some(v) = queue.pop() {
            for g in &self.gens {
                let w = g.apply(&v);
                if s.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
        s
    }

    pub fn is_submodule(&self, s: &Subspace) -> bool {
        self.gens.iter().all(|g| s.is_invariant(g))
    }

    /// Action on an invariant subspace, in the coordinates of `s.basis()`.
    pub fn submodule(&self, s: &Subspace) -> F2GModule {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let rows = s.basis().iter().map(|b| s.coords(&g.apply(b)).expect("not invariant")).collect();
                F2Matrix::from_rows(s.dim(), rows)
            })
            .collect();
        F2GModule::new(s.dim(), gens)
    }

    /// Quotient by an invariant subspace, with the projection used.
    pub fn quotient(&self, s: &Subspace) -> (F2GModule, Quotient) {
        let q = Quotient::new(&Subspace::full(self.dim), s);
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let rows = (0..q.dim()).map(|i| q.project(&g.apply(&q.lift(&F2Vec::unit(q.dim(), i))))).collect();
                F2Matrix::from_rows(q.dim(), rows)
            })
            .collect();
        (F2GModule::new(q.dim(), gens), q)
    }

    /// Direct sum.
    pub fn direct_sum(&self, other: &F2GModule) -> F2GModule {
        assert_eq!(self.gens.len(), other.gens.len());
        let n = self.dim + other.dim;
        let gens = self
            .gens
            .iter()
            .zip(&other.gens)
            .map(|(a, b)| {
                let mut m = F2Matrix::zero(n, n);
                for i in 0..self.dim {
                    for j in a.row(i).ones() {
                        m.set(i, j, true);
                    }
                }
                for i in 0..other.dim {
                    for j in b.row(i).ones() {
                        m.set(self.dim + i, self.dim + j, true);
                    }
                }
                m
            })
            .collect();
        F2GModule::new(n, gens)
    }

    /// Every nonzero submodule that is irreducible (exhaustive, dim <= 16).
    pub fn minimal_submodules(&self) -> Vec<Subspace> {
        assert!(self.dim <= 16, "exhaustive search only for small modules");
        let mut spins: BTreeMap<Vec<F2Vec>, Subspace> = BTreeMap::new();
        for bits in 1..(1u64 << self.dim) {
            let v = F2Vec::from_u64(self.dim, bits);
            let s = self.spin([v]);
            spins.entry(s.basis().to_vec()).or_insert(s);
        }
        let all: Vec<Subspace> = spins.into_values().collect();
        let min_dim_ok = |s: &Subspace| s.elements().iter().filter(|v| !v.is_zero()).all(|v| self.spin([v.clone()]).dim() == s.dim());
        let mut out: Vec<Subspace> = all.into_iter().filter(|s| min_dim_ok(s)).collect();
        out.sort_by_key(|s| s.basis().to_vec());
        out
    }

    pub fn is_irreducible(&self) -> bool {
        self.dim > 0 && self.minimal_submodules().iter().all(|s| s.dim() == self.dim)
    }

    pub fn socle(&self) -> Subspace {
        self.minimal_submodules().iter().fold(Subspace::zero(self.dim), |acc, s| acc.sum(s))
    }

    /// Socle series as subspaces of this module, bottom first.
    pub fn socle_series(&self) -> Vec<Subspace> {
        let mut layers = Vec::new();
        let mut cur = Subspace::zero(self.dim);
        while cur.dim() < self.dim {
            let (q, proj) = self.quotient(&cur);
            let soc = q.socle();
            let mut next = cur.clone();
            for b in soc.basis() {
                next.insert(proj.lift(b));
            }
            layers.push(next.clone());
            cur = next;
        }
        layers
    }

    /// Dimensions of the socle layers and whether each layer is simple.
    pub fn socle_layers(&self) -> Vec<(usize, bool)> {
        let series = self.socle_series();
        let mut out = Vec::new();
        let mut prev = Subspace::zero(self.dim);
        for s in &series {
            let (q, proj) = self.submodule(s).quotient(&Subspace::span(s.dim(), prev.basis().iter().map(|b| s.coords(b).unwrap())));
            let _ = proj;
            out.push((q.dim(), q.is_irreducible()));
            prev = s.clone();
        }
        out
    }

    /// Uniserial iff every socle layer is simple.
    pub fn is_uniserial(&self) -> bool {
        self.socle_layers().iter().all(|&(_, simple)| simple)
    }

    /// Composition factors bottom-up, picking at each stage the minimal
    /// submodule that is first (`prefer_last = false`) or last in a fixed
    /// order; both choices give the same multiset.
    pub fn composition_series(&self, prefer_last: bool) -> Vec<F2GModule> {
        let mut factors = Vec::new();
        let mut cur = Subspace::zero(self.dim);
        while cur.dim() < self.dim {
            let (q, proj) = self.quotient(&cur);
            let mins = q.minimal_submodules();
            let pick = if prefer_last { mins.last() } else { mins.first() }.expect("nonzero module").clone();
            factors.push(q.submodule(&pick));
            for b in pick.basis() {
                cur.insert(proj.lift(b));
            }
        }
        factors
    }

    /// Isotypic decomposition under the first generator, which must have order 7.
    pub fn isotypic_c7(&self) -> Result<Isotypic> {
        let s = &self.gens[0];
        if !s.pow(7).is_identity() {
            return Err(Error::Module(String::from("generator does not satisfy x^7 = 1")));
        }
        let labels = [C7Label::One, C7Label::CubicA, C7Label::CubicB];
        let parts: [Subspace; 3] = core::array::from_fn(|i| {
            let k = poly_eval(labels[i].poly(), s).left_kernel();
            Subspace::span(self.dim, k)
        });
        if parts.iter().map(|p| p.dim()).sum::<usize>() != self.dim {
            return Err(Error::Module(String::from("isotypic parts do not fill the module")));
        }
        let mut frame_rows = Vec::new();
        for p in &parts {
            frame_rows.extend(p.basis().iter().cloned());
        }
        let frame = F2Matrix::from_rows(self.dim, frame_rows);
        let projections = core::array::from_fn(|i| {
            let start: usize = parts[..i].iter().map(|p| p.dim()).sum();
            let end = start + parts[i].dim();
            let rows = (0..self.dim)
                .map(|r| {
                    let c = frame.solve_left(&F2Vec::unit(self.dim, r)).expect("frame spans");
                    let mut out = F2Vec::zero(self.dim);
                    for k in c.ones().filter(|&k| k >= start && k < end) {
                        out.xor_assign(frame.row(k));
                    }
                    out
                })
                .collect();
            F2Matrix::from_rows(self.dim, rows)
        });
        let multiplicities = core::array::from_fn(|i| parts[i].dim() / labels[i].dim());
        Ok(Isotypic { multiplicities, parts, projections })
    }

    /// The C7 label of an irreducible module (first generator of order 7).
    pub fn c7_label(&self) -> Result<C7Label> {
        let iso = self.isotypic_c7()?;
        let nonzero: Vec<usize> = (0..3).filter(|&i| iso.multiplicities[i] > 0).collect();
        match (nonzero.as_slice(), self.dim) {
            ([0], 1) => Ok(C7Label::One),
            ([1], 3) => Ok(C7Label::CubicA),
            ([2], 3) => Ok(C7Label::CubicB),
            _ => Err(Error::Module(format!("not irreducible for C7: multiplicities {:?}", iso.multiplicities))),
        }
    }

    /// Intertwiners X with `A_g X = X B_g` for all generators.
    pub fn hom_space(&self, other: &F2GModule) -> Vec<F2Matrix> {
        let (m, n) = (self.dim, other.dim);
        let unknowns = m * n;
        // each unknown X[i][j] -> index i*n + j; equations (A X + X B)[r][c] = 0
        let mut eq_cols: Vec<F2Vec> = Vec::new();
        for (a, b) in self.gens.iter().zip(&other.gens) {
            for r in 0..m {
                for c in 0..n {
                    let mut e = F2Vec::zero(unknowns);
                    for k in a.row(r).ones() {
                        e.flip(k * n + c);
                    }
                    for k in 0..n {
                        if b.get(k, c) {
                            e.flip(r * n + k);
                        }
                    }
                    eq_cols.push(e);
                }
            }
        }
        // solutions x with x . e = 0 for all e: left kernel of the matrix with columns e
        let sys = F2Matrix::from_rows(unknowns, eq_cols).transpose();
        sys.left_kernel()
            .into_iter()
            .map(|x| {
                let rows = (0..m).map(|i| x.slice(i * n, (i + 1) * n)).collect();
                F2Matrix::from_rows(n, rows)
            })
            .collect()
    }

    /// Isomorphism test: C7 isotypic invariants for one generator of order 7,
    /// otherwise a search for an invertible intertwiner.
    pub fn is_isomorphic(&self, other: &F2GModule) -> bool {
        if self.dim != other.dim || self.gens.len() != other.gens.len() {
            return false;
        }
        if self.gens.len() == 1 {
            if let (Ok(a), Ok(b)) = (self.isotypic_c7(), other.isotypic_c7()) {
                return a.multiplicities == b.multiplicities;
            }
        }
        let hom = self.hom_space(other);
        assert!(hom.len() <= 20, "intertwiner space too large to search");
        (1u64..(1 << hom.len())).any(|mask| {
            let mut x = F2Matrix::zero(self.dim, self.dim);
            for (i, h) in hom.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    x = x.add(h);
                }
            }
            x.inverse().is_some()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn regular_c7() -> F2GModule {
        let m = F2Matrix::from_rows(7, (0..7).map(|i| F2Vec::unit(7, (i + 1) % 7)).collect());
        F2GModule::new(7, alloc::vec![m])
    }

    #[test]
    fn regular_module_isotypic() {
        let iso = regular_c7().isotypic_c7().unwrap();
        assert_eq!(iso.multiplicities, [1, 1, 1]);
        let s = &regular_c7().gens()[0].clone();
        for p in &iso.projections {
            assert_eq!(p.mul(s), s.mul(p));
            assert_eq!(p.mul(p), p.clone());
        }
    }

    #[test]
    fn trivial_module_isotypic() {
        assert_eq!(F2GModule::trivial(5, 1).isotypic_c7().unwrap().multiplicities, [5, 0, 0]);
    }

    #[test]
    fn cubic_types_differ() {
        let a = F2GModule::c7_irreducible(C7Label::CubicA);
        let b = F2GModule::c7_irreducible(C7Label::CubicB);
        assert!(!a.is_isomorphic(&b));
        assert!(a.is_isomorphic(&a));
        assert_eq!(a.c7_label().unwrap(), C7Label::CubicA);
        assert_eq!(b.c7_label().unwrap(), C7Label::CubicB);
        assert!(a.is_irreducible());
    }

    #[test]
    fn conjugated_module_is_isomorphic() {
        let a = F2GModule::c7_irreducible(C7Label::CubicA);
        let p = F2Matrix::from_rows(3, alloc::vec![F2Vec::from_u64(3, 0b011), F2Vec::from_u64(3, 0b010), F2Vec::from_u64(3, 0b111)]);
        let pi = p.inverse().unwrap();
        let b = F2GModule::new(3, alloc::vec![pi.mul(&a.gens()[0]).mul(&p)]);
        assert!(a.is_isomorphic(&b));
        // the intertwiner search agrees with the isotypic test
        assert!(a.hom_space(&b).iter().any(|h| h.inverse().is_some()));
    }

    #[test]
    fn semisimple_is_not_uniserial() {
        let m = F2GModule::c7_irreducible(C7Label::One).direct_sum(&F2GModule::c7_irreducible(C7Label::CubicA));
        assert!(!m.is_uniserial());
        let dims: Vec<usize> = m.composition_series(false).iter().map(|f| f.dim()).collect();
        let mut d = dims.clone();
        d.sort();
        assert_eq!(d, alloc::vec![1, 3]);
    }
}
