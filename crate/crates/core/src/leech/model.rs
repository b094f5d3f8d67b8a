//! A rank-24 lattice given by integer generators in an ambient integer
//! space whose dot product is the standard (minimal norm 32) scaling.
//! Both Leech models are instances.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use super::enumerate::{Enumerator, DEFAULT_BUDGET};
use super::zlat::{self, IntMatrix};
use crate::error::{Error, Result};
use crate::exact::f2::F2Vec;

pub const DIM: usize = 24;

#[derive(Clone, Debug)]
pub struct LeechLattice {
    basis: Vec<Vec<i64>>,
    inv: (IntMatrix, BigInt),
    gram_u: Vec<Vec<i64>>,
    enumerator: Enumerator,
    budget: u64,
}

pub fn norm(v: &[i64]) -> i64 {
    v.iter().map(|x| x * x).sum()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Sign normalization: first nonzero coordinate positive.
pub fn sign_normalize(v: &[i64]) -> Vec<i64> {
    match v.iter().find(|&&x| x != 0) {
        Some(&x) if x < 0 => v.iter().map(|y| -y).collect(),
        _ => v.to_vec(),
    }
}

fn calib(s: &str) -> Error {
    Error::Calibration(String::from(s))
}

impl LeechLattice {
    /// Hermite normal form of the generators with the rows reversed, so
    /// the leading sublattices are coordinate sections and the leading
    /// minors of Gram/8 are powers of 2. The result must have Gram/8 even
    /// and unimodular.
    pub fn from_generators(gens: &[Vec<i64>]) -> Result<Self> {
        let mut red = zlat::hnf(&zlat::to_big(gens));
        if red.len() != DIM {
            return Err(calib("generators do not span a rank-24 lattice"));
        }
        red.reverse();
        let basis = zlat::to_i64(&red).ok_or_else(|| calib("basis entries overflow"))?;
        let g = zlat::gram(&red);
        let mut gram_u = alloc::vec![alloc::vec![0i64; DIM]; DIM];
        for i in 0..DIM {
            for j in 0..DIM {
                let x = g[i][j].to_i64().ok_or_else(|| calib("Gram entry overflow"))?;
                if x % 8 != 0 {
                    return Err(calib("Gram matrix is not divisible by 8"));
                }
                gram_u[i][j] = x / 8;
            }
            if gram_u[i][i] % 2 != 0 {
                return Err(calib("Gram/8 is not even"));
            }
        }
        let d = zlat::det(&zlat::to_big(&gram_u));
        if !d.is_one() {
            return Err(Error::Calibration(alloc::format!("Gram/8 has determinant {d}")));
        }
        let inv = zlat::inverse(&red)?;
        let enumerator = Enumerator::new(&gram_u)?;
        Ok(LeechLattice { basis, inv, gram_u, enumerator, budget: DEFAULT_BUDGET })
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    /// Gram matrix divided by 8.
    pub fn gram_u(&self) -> &[Vec<i64>] {
        &self.gram_u
    }

    pub fn gram_u_det(&self) -> BigInt {
        zlat::det(&zlat::to_big(&self.gram_u))
    }

    pub fn coords(&self, v: &[i64]) -> Option<Vec<i64>> {
        let big: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        zlat::integer_coords(&self.inv, &big)?.iter().map(|x| x.to_i64()).collect()
    }

    pub fn is_member(&self, v: &[i64]) -> bool {
        v.len() == DIM && self.coords(v).is_some()
    }

    pub fn from_coords(&self, c: &[i64]) -> Vec<i64> {
        let mut v = alloc::vec![0i64; DIM];
        for (ci, row) in c.iter().zip(&self.basis) {
            if *ci != 0 {
                for j in 0..DIM {
                    v[j] += ci * row[j];
                }
            }
        }
        v
    }

    /// Class in Lambda/2Lambda as basis coordinates mod 2.
    pub fn class(&self, v: &[i64]) -> Result<F2Vec> {
        let c = self.coords(v).ok_or(Error::NotInLattice)?;
        Ok(F2Vec::from_bits(&c.iter().map(|x| x.rem_euclid(2) == 1).collect::<Vec<_>>()))
    }

    /// The representative with 0/1 basis coordinates.
    pub fn lift(&self, c: &F2Vec) -> Vec<i64> {
        let co: Vec<i64> = (0..DIM).map(|i| c.get(i) as i64).collect();
        self.from_coords(&co)
    }

    /// q(c) = type mod 2.
    pub fn q(&self, c: &F2Vec) -> bool {
        (norm(&self.lift(c)) / 16) % 2 == 1
    }

    /// B(u, w) = u.w/8 mod 2.
    pub fn b(&self, u: &F2Vec, w: &F2Vec) -> bool {
        let mut s = 0i64;
        for i in u.ones() {
            for j in w.ones() {
                s += self.gram_u[i][j];
            }
        }
        s.rem_euclid(2) == 1
    }

    /// All lattice vectors of norm at most `bound` (standard units), up to
    /// sign, as basis coordinates.
    pub fn short_vectors(&self, bound: i64) -> Result<Vec<Vec<i64>>> {
        self.enumerator.enumerate(None, bound.div_euclid(8), self.budget)
    }

    /// The u in v + 2Lambda with norm(u) <= bound, one from each pair +-u.
    pub fn coset_min_vectors(&self, v: &[i64], bound: i64) -> Result<Vec<Vec<i64>>> {
        let c = self.class(v)?;
        self.class_min_vectors(&c, bound)
    }

    pub fn class_min_vectors(&self, c: &F2Vec, bound: i64) -> Result<Vec<Vec<i64>>> {
        let p: Vec<u8> = (0..DIM).map(|i| c.get(i) as u8).collect();
        let xs = self.enumerator.enumerate(Some(&p), bound.div_euclid(8), self.budget)?;
        Ok(xs.iter().map(|x| self.from_coords(x)).collect())
    }

    /// Minimal type in the class; types above 4 do not occur in the Leech
    /// lattice, and anything not found below norm 64 is reported as an error.
    pub fn class_type_of(&self, c: &F2Vec) -> Result<u32> {
        if c.is_zero() {
            return Err(Error::InDoubleLattice);
        }
        let vs = self.class_min_vectors(c, 64)?;
        vs.iter().map(|v| (norm(v) / 16) as u32).min().ok_or_else(|| calib("class has no vector of norm at most 64"))
    }

    pub fn class_type(&self, v: &[i64]) -> Result<u32> {
        self.class_type_of(&self.class(v)?)
    }

    /// The 24 mutually orthogonal norm-64 vectors of a type-4 class, sorted
    /// and sign-normalized.
    pub fn cross_frame(&self, c: &F2Vec) -> Result<Vec<Vec<i64>>> {
        if c.is_zero() {
            return Err(Error::InDoubleLattice);
        }
        let mut vs: Vec<Vec<i64>> = self.class_min_vectors(c, 64)?.iter().map(|v| sign_normalize(v)).collect();
        if vs.iter().any(|v| norm(v) != 64) {
            return Err(Error::NotPure("class is not of type 4"));
        }
        vs.sort();
        Ok(vs)
    }

    /// Canonical representative: the least sign-normalized frame vector.
    pub fn canonical_rep(&self, c: &F2Vec) -> Result<Vec<i64>> {
        Ok(self.cross_frame(c)?.swap_remove(0))
    }
}

/// Frame sanity: 24 vectors, norm 64, pairwise orthogonal.
pub fn is_orthogonal_frame(frame: &[Vec<i64>]) -> bool {
    frame.len() == DIM
        && frame.iter().all(|v| norm(v) == 64)
        && (0..frame.len()).all(|i| (i + 1..frame.len()).all(|j| dot(&frame[i], &frame[j]) == 0))
}

/// A type-4 class with its canonical representative and frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossClass {
    pub class: F2Vec,
    pub representative: Vec<i64>,
    pub frame: Vec<Vec<i64>>,
}

impl CrossClass {
    pub fn new(l: &LeechLattice, v: &[i64]) -> Result<Self> {
        let class = l.class(v)?;
        Self::of_class(l, class)
    }

    pub fn of_class(l: &LeechLattice, class: F2Vec) -> Result<Self> {
        let frame = l.cross_frame(&class)?;
        Ok(CrossClass { representative: frame[0].clone(), class, frame })
    }
}
