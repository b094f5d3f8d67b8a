use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Packed vector over F2.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Vec {
    len: usize,
    words: Vec<u64>,
}

impl F2Vec {
    pub fn zero(len: usize) -> Self {
        F2Vec { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = F2Vec::zero(len);
        v.set(i, true);
        v
    }

    /// Low `len` bits of `bits`.
    pub fn from_u64(len: usize, bits: u64) -> Self {
        assert!(len <= 64);
        let mut v = F2Vec::zero(len);
        if len > 0 {
            v.words[0] = if len == 64 { bits } else { bits & ((1u64 << len) - 1) };
        }
        v
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = F2Vec::zero(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn to_u64(&self) -> u64 {
        assert!(self.len <= 64);
        self.words.first().copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, b: bool) {
        let m = 1u64 << (i % 64);
        if b {
            self.words[i / 64] |= m;
        } else {
            self.words[i / 64] &= !m;
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &F2Vec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &F2Vec) -> F2Vec {
        let mut v = self.clone();
        v.xor_assign(other);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn weight(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    pub fn dot(&self, other: &F2Vec) -> bool {
        let c: u32 = self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones()).sum();
        c & 1 == 1
    }

    /// Index of the lowest set bit.
    pub fn first_one(&self) -> Option<usize> {
        for (k, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(k * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    /// Concatenation `self | other`.
    pub fn concat(&self, other: &F2Vec) -> F2Vec {
        let mut v = F2Vec::zero(self.len + other.len);
        for i in self.ones() {
            v.set(i, true);
        }
        for i in other.ones() {
            v.set(self.len + i, true);
        }
        v
    }

    pub fn slice(&self, start: usize, end: usize) -> F2Vec {
        let mut v = F2Vec::zero(end - start);
        for i in start..end {
            if self.get(i) {
                v.set(i - start, true);
            }
        }
        v
    }
}

impl fmt::Debug for F2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Matrix over F2 stored by rows; vectors act on the left (`v * M`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    cols: usize,
    rows: Vec<F2Vec>,
}

impl F2Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        F2Matrix { cols, rows: vec![F2Vec::zero(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        F2Matrix { cols: n, rows: (0..n).map(|i| F2Vec::unit(n, i)).collect() }
    }

    pub fn from_rows(cols: usize, rows: Vec<F2Vec>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols));
        F2Matrix { cols, rows }
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[F2Vec] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &F2Vec {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        self.rows[i].set(j, b)
    }

    /// Row vector times matrix.
    pub fn apply(&self, v: &F2Vec) -> F2Vec {
        debug_assert_eq!(v.len(), self.rows.len());
        let mut out = F2Vec::zero(self.cols);
        for i in v.ones() {
            out.xor_assign(&self.rows[i]);
        }
        out
    }

    pub fn mul(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.cols, other.rows.len());
        F2Matrix { cols: other.cols, rows: self.rows.iter().map(|r| other.apply(r)).collect() }
    }

    pub fn add(&self, other: &F2Matrix) -> F2Matrix {
        F2Matrix { cols: self.cols, rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a.xor(b)).collect() }
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zero(self.cols, self.rows.len());
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.ones() {
                t.rows[j].set(i, true);
            }
        }
        t
    }

    pub fn pow(&self, mut k: u64) -> F2Matrix {
        let mut base = self.clone();
        let mut acc = F2Matrix::identity(self.cols);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.rows.len() == self.cols && self.rows.iter().enumerate().all(|(i, r)| *r == F2Vec::unit(self.cols, i))
    }

    /// Smallest k >= 1 with M^k = 1, searched up to `limit`.
    pub fn order(&self, limit: u64) -> Option<u64> {
        let mut p = self.clone();
        for k in 1..=limit {
            if p.is_identity() {
                return Some(k);
            }
            p = p.mul(self);
        }
        None
    }

    pub fn rank(&self) -> usize {
        Subspace::span(self.cols, self.rows.iter().cloned()).dim()
    }

    /// All v with v * M = 0, as a basis.
    pub fn left_kernel(&self) -> Vec<F2Vec> {
        let n = self.rows.len();
        let mut aug: Vec<(F2Vec, F2Vec)> = self.rows.iter().enumerate().map(|(i, r)| (r.clone(), F2Vec::unit(n, i))).collect();
        let mut out = Vec::new();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        for k in 0..aug.len() {
            let mut cur = aug[k].clone();
            for &(p, idx) in &pivots {
                if cur.0.get(p) {
                    cur.0.xor_assign(&aug[idx].0);
                    cur.1.xor_assign(&aug[idx].1);
                }
            }
            match cur.0.first_one() {
                None => out.push(cur.1.clone()),
                Some(p) => pivots.push((p, k)),
            }
            aug[k] = cur;
        }
        out
    }

    /// Some x with x * M = b.
    pub fn solve_left(&self, b: &F2Vec) -> Option<F2Vec> {
        let n = self.rows.len();
        let mut piv: Vec<(usize, F2Vec, F2Vec)> = Vec::new();
        for (i, r) in self.rows.iter().enumerate() {
            let mut v = r.clone();
            let mut c = F2Vec::unit(n, i);
            for (p, pv, pc) in &piv {
                if v.get(*p) {
                    v.xor_assign(pv);
                    c.xor_assign(pc);
                }
            }
            if let Some(p) = v.first_one() {
                piv.push((p, v, c));
            }
        }
        let mut v = b.clone();
        let mut x = F2Vec::zero(n);
        for (p, pv, pc) in &piv {
            if v.get(*p) {
                v.xor_assign(pv);
                x.xor_assign(pc);
            }
        }
        if v.is_zero() {
            Some(x)
        } else {
            None
        }
    }

    pub fn inverse(&self) -> Option<F2Matrix> {
        let n = self.cols;
        if self.rows.len() != n {
            return None;
        }
        let rows: Option<Vec<F2Vec>> = (0..n).map(|i| self.solve_left(&F2Vec::unit(n, i))).collect();
        let inv = F2Matrix { cols: n, rows: rows? };
        if inv.mul(self).is_identity() {
            Some(inv)
        } else {
            None
        }
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{:?}", r)?;
        }
        Ok(())
    }
}

/// A subspace kept in reduced echelon form (pivot = lowest set bit).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    len: usize,
    basis: Vec<F2Vec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(len: usize) -> Self {
        Subspace { len, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(len: usize) -> Self {
        Subspace::span(len, (0..len).map(|i| F2Vec::unit(len, i)))
    }

    pub fn span(len: usize, gens: impl IntoIterator<Item = F2Vec>) -> Self {
        let mut s = Subspace::zero(len);
        for g in gens {
            s.insert(g);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.len
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[F2Vec] {
        &self.basis
    }

    pub fn reduce(&self, v: &F2Vec) -> F2Vec {
        let mut v = v.clone();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(b);
            }
        }
        v
    }

    pub fn contains(&self, v: &F2Vec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds a vector; returns true when the dimension grows.
    pub fn insert(&mut self, v: F2Vec) -> bool {
        let v = self.reduce(&v);
        let Some(p) = v.first_one() else {
            return false;
        };
        for b in self.basis.iter_mut() {
            if b.get(p) {
                b.xor_assign(&v);
            }
        }
        self.basis.push(v);
        self.pivots.push(p);
        true
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for b in &other.basis {
            s.insert(b.clone());
        }
        s
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        // kernel of (a, b) -> a + b on self x other
        let rows: Vec<F2Vec> = self.basis.iter().chain(other.basis.iter()).cloned().collect();
        let m = F2Matrix::from_rows(self.len, rows);
        let mut out = Subspace::zero(self.len);
        for k in m.left_kernel() {
            let mut v = F2Vec::zero(self.len);
            for i in k.ones().filter(|&i| i < self.basis.len()) {
                v.xor_assign(&self.basis[i]);
            }
            out.insert(v);
        }
        out
    }

    /// Coordinates of a member with respect to `basis()`.
    pub fn coords(&self, v: &F2Vec) -> Option<F2Vec> {
        let mut v = v.clone();
        let mut c = F2Vec::zero(self.dim());
        for (k, (b, &p)) in self.basis.iter().zip(&self.pivots).enumerate() {
            if v.get(p) {
                v.xor_assign(b);
                c.set(k, true);
            }
        }
        if v.is_zero() {
            Some(c)
        } else {
            None
        }
    }

    /// Every element (only for small dimensions).
    pub fn elements(&self) -> Vec<F2Vec> {
        assert!(self.dim() <= 24);
        let mut out = vec![F2Vec::zero(self.len)];
        for b in &self.basis {
            let more: Vec<F2Vec> = out.iter().map(|v| v.xor(b)).collect();
            out.extend(more);
        }
        out
    }

    pub fn is_invariant(&self, m: &F2Matrix) -> bool {
        self.basis.iter().all(|b| self.contains(&m.apply(b)))
    }
}

/// Quotient map `V -> V/W` with coordinates on a fixed complement.
#[derive(Clone, Debug)]
pub struct Quotient {
    sub_dim: usize,
    ambient: usize,
    complement: Vec<F2Vec>,
    // rows: basis of W followed by the complement
    frame: F2Matrix,
}

impl Quotient {
    /// `w` must lie inside `v`.
    pub fn new(v: &Subspace, w: &Subspace) -> Self {
        assert!(v.contains_space(w));
        let mut full = w.clone();
        let mut complement = Vec::new();
        for b in v.basis() {
            if full.insert(b.clone()) {
                complement.push(b.clone());
            }
        }
        let rows: Vec<F2Vec> = w.basis().iter().chain(complement.iter()).cloned().collect();
        Quotient { sub_dim: w.dim(), ambient: v.ambient(), complement, frame: F2Matrix::from_rows(v.ambient(), rows) }
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    pub fn lift(&self, q: &F2Vec) -> F2Vec {
        let mut v = F2Vec::zero(self.ambient);
        for i in q.ones() {
            v.xor_assign(&self.complement[i]);
        }
        v
    }

    pub fn project(&self, v: &F2Vec) -> F2Vec {
        let c = self.frame.solve_left(v).expect("vector outside the space");
        c.slice(self.sub_dim, self.sub_dim + self.complement.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat(n: usize) -> impl Strategy<Value = F2Matrix> {
        proptest::collection::vec(any::<u64>(), n).prop_map(move |ws| F2Matrix::from_rows(n, ws.into_iter().map(|w| F2Vec::from_u64(n, w)).collect()))
    }

    #[test]
    fn kernel_and_solve() {
        let m = F2Matrix::from_rows(3, vec![F2Vec::from_u64(3, 0b011), F2Vec::from_u64(3, 0b110), F2Vec::from_u64(3, 0b101)]);
        assert_eq!(m.rank(), 2);
        let k = m.left_kernel();
        assert_eq!(k.len(), 1);
        assert!(m.apply(&k[0]).is_zero());
        assert!(m.solve_left(&F2Vec::from_u64(3, 0b111)).is_none());
        let x = m.solve_left(&F2Vec::from_u64(3, 0b101)).unwrap();
        assert_eq!(m.apply(&x), F2Vec::from_u64(3, 0b101));
    }

    #[test]
    fn quotient_round_trip() {
        let v = Subspace::full(5);
        let w = Subspace::span(5, [F2Vec::from_u64(5, 0b00011), F2Vec::from_u64(5, 0b01100)]);
        let q = Quotient::new(&v, &w);
        assert_eq!(q.dim(), 3);
        for bits in 0..8u64 {
            let x = F2Vec::from_u64(3, bits);
            assert_eq!(q.project(&q.lift(&x)), x);
        }
        assert!(q.project(&F2Vec::from_u64(5, 0b01111)).is_zero());
    }

    proptest! {
        #[test]
        fn rank_nullity(m in mat(12)) {
            prop_assert_eq!(m.rank() + m.left_kernel().len(), 12);
        }

        #[test]
        fn echelon_idempotent(m in mat(10)) {
            let s = Subspace::span(10, m.rows().iter().cloned());
            let t = Subspace::span(10, s.basis().iter().cloned());
            prop_assert_eq!(s, t);
        }

        #[test]
        fn inverse_when_full_rank(m in mat(8)) {
            match m.inverse() {
                Some(inv) => prop_assert!(m.mul(&inv).is_identity()),
                None => prop_assert!(m.rank() < 8),
            }
        }

        #[test]
        fn intersection_dimension(a in mat(9), b in mat(9)) {
            let sa = Subspace::span(9, a.rows()[..4].iter().cloned());
            let sb = Subspace::span(9, b.rows()[..5].iter().cloned());
            let i = sa.intersect(&sb);
            prop_assert_eq!(i.dim() + sa.sum(&sb).dim(), sa.dim() + sb.dim());
            prop_assert!(sa.contains_space(&i) && sb.contains_space(&i));
        }
    }
}
