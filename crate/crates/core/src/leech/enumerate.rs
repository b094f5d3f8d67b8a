//! Exact Fincke-Pohst enumeration for an integral positive definite Gram
//! matrix. Every bound is an integer comparison: with `d_k` the leading
//! minors and `lam[j][k] = d_{k+1} mu_jk`, the form is
//! `sum_k t_k^2 / (d_k d_{k+1})` with `t_k = d_{k+1} x_k + sum_{j>k} lam[j][k] x_j`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug)]
pub struct Enumerator {
    n: usize,
    gram: Vec<Vec<i64>>,
    d: Vec<i128>,
    lam: Vec<Vec<i128>>,
    w: Vec<i128>,
    qn: i128,
}

fn isqrt(n: i128) -> i128 {
    if n <= 0 {
        return 0;
    }
    num_integer::Roots::sqrt(&n)
}

fn too_big() -> Error {
    Error::Calibration(alloc::string::String::from("enumeration constants exceed 128 bits"))
}

impl Enumerator {
    pub fn new(gram: &[Vec<i64>]) -> Result<Self> {
        let n = gram.len();
        let g: Vec<Vec<BigInt>> = gram.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let mut d = alloc::vec![BigInt::zero(); n + 1];
        d[0] = BigInt::one();
        let mut lam = alloc::vec![alloc::vec![BigInt::zero(); n]; n];
        for k in 0..n {
            for j in 0..=k {
                let mut u = g[k][j].clone();
                for i in 0..j {
                    u = (&d[i + 1] * &u - &lam[k][i] * &lam[j][i]) / &d[i];
                }
                if j < k {
                    lam[k][j] = u;
                } else {
                    if u <= BigInt::zero() {
                        return Err(Error::Calibration(alloc::string::String::from("Gram matrix is not positive definite")));
                    }
                    d[k + 1] = u;
                }
            }
        }
        let qn = (0..n).fold(BigInt::one(), |acc, k| acc.lcm(&(&d[k] * &d[k + 1])));
        let w: Vec<BigInt> = (0..n).map(|k| &qn / (&d[k] * &d[k + 1])).collect();
        let cv = |x: &BigInt| x.to_i128().ok_or_else(too_big);
        let qn_i = cv(&qn)?;
        if qn_i.checked_mul(1 << 20).is_none() {
            return Err(too_big());
        }
        Ok(Enumerator {
            n,
            gram: gram.to_vec(),
            d: d.iter().map(cv).collect::<Result<_>>()?,
            lam: lam.iter().map(|r| r.iter().map(cv).collect::<Result<_>>()).collect::<Result<_>>()?,
            w: w.iter().map(cv).collect::<Result<_>>()?,
            qn: qn_i,
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// Leading principal minors d_1..d_n.
    pub fn minors(&self) -> &[i128] {
        &self.d[1..]
    }

    pub fn norm(&self, x: &[i64]) -> i64 {
        let mut s = 0i64;
        for i in 0..self.n {
            if x[i] == 0 {
                continue;
            }
            let row: i64 = (0..self.n).map(|j| self.gram[i][j] * x[j]).sum();
            s += x[i] * row;
        }
        s
    }

    /// All `x` with `x G x^T <= bound` and `x = parity (mod 2)` when a parity
    /// is given, one from each pair `{x, -x}` (the last nonzero entry positive).
    pub fn enumerate(&self, parity: Option<&[u8]>, bound: i64, budget: u64) -> Result<Vec<Vec<i64>>> {
        let mut st = State { x: alloc::vec![0i64; self.n], out: Vec::new(), nodes: 0, budget };
        let total = (bound as i128).checked_mul(self.qn).ok_or_else(too_big)?;
        if bound >= 0 {
            self.rec(self.n, total, true, parity, &mut st)?;
        }
        Ok(st.out)
    }

    fn rec(&self, level: usize, rem: i128, zero_above: bool, parity: Option<&[u8]>, st: &mut State) -> Result<()> {
        if level == 0 {
            st.out.push(st.x.clone());
            return Ok(());
        }
        st.nodes += 1;
        if st.nodes > st.budget {
            return Err(Error::BudgetExceeded(st.budget));
        }
        let k = level - 1;
        let c: i128 = (k + 1..self.n).map(|j| self.lam[j][k] * st.x[j] as i128).sum();
        let dk = self.d[k + 1];
        let t_max = isqrt(rem / self.w[k]);
        let mut lo = Integer::div_ceil(&(-t_max - c), &dk);
        let hi = Integer::div_floor(&(t_max - c), &dk);
        if zero_above && lo < 0 {
            lo = 0;
        }
        let mut x = lo;
        if let Some(p) = parity {
            if (x - p[k] as i128).rem_euclid(2) != 0 {
                x += 1;
            }
        }
        let step = if parity.is_some() { 2 } else { 1 };
        while x <= hi {
            let t = dk * x + c;
            let used = self.w[k] * t * t;
            if used <= rem {
                st.x[k] = x as i64;
                self.rec(level - 1, rem - used, zero_above && x == 0, parity, st)?;
            }
            x += step;
        }
        st.x[k] = 0;
        Ok(())
    }
}

struct State {
    x: Vec<i64>,
    out: Vec<Vec<i64>>,
    nodes: u64,
    budget: u64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive(g: &[Vec<i64>], parity: Option<&[u8]>, bound: i64, r: i64) -> Vec<Vec<i64>> {
        let n = g.len();
        let e = Enumerator::new(g).unwrap();
        let mut out = Vec::new();
        let total = (2 * r + 1).pow(n as u32);
        for idx in 0..total {
            let mut x = Vec::with_capacity(n);
            let mut t = idx;
            for _ in 0..n {
                x.push(t % (2 * r + 1) - r);
                t /= 2 * r + 1;
            }
            if let Some(p) = parity {
                if !x.iter().zip(p).all(|(a, &b)| (a - b as i64).rem_euclid(2) == 0) {
                    continue;
                }
            }
            let last = x.iter().rev().find(|&&a| a != 0);
            if last.is_some_and(|&a| a < 0) {
                continue;
            }
            if e.norm(&x) <= bound {
                out.push(x);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn z2_short_vectors() {
        let g = alloc::vec![alloc::vec![1, 0], alloc::vec![0, 1]];
        let e = Enumerator::new(&g).unwrap();
        let mut v = e.enumerate(None, 1, 1000).unwrap();
        v.sort();
        assert_eq!(v, alloc::vec![alloc::vec![0, 0], alloc::vec![0, 1], alloc::vec![1, 0]]);
    }

    #[test]
    fn budget_is_enforced() {
        let g = alloc::vec![alloc::vec![1, 0], alloc::vec![0, 1]];
        let e = Enumerator::new(&g).unwrap();
        assert!(matches!(e.enumerate(None, 10_000, 10), Err(Error::BudgetExceeded(10))));
    }

    #[test]
    fn rank4_fixture_matches_naive() {
        // D4 root lattice Gram matrix
        let g = alloc::vec![alloc::vec![2, -1, 0, 0], alloc::vec![-1, 2, -1, -1], alloc::vec![0, -1, 2, 0], alloc::vec![0, -1, 0, 2],];
        let e = Enumerator::new(&g).unwrap();
        let mut got = e.enumerate(None, 2, 1_000_000).unwrap();
        got.sort();
        assert_eq!(got.len(), 13);
        assert_eq!(got, naive(&g, None, 2, 2));
        let p = [1u8, 0, 1, 0];
        let mut got = e.enumerate(Some(&p), 6, 1_000_000).unwrap();
        got.sort();
        assert_eq!(got, naive(&g, Some(&p), 6, 4));
    }

    proptest! {
        #[test]
        fn random_rank3_matches_naive(a in 2i64..6, b in -1i64..2, c in 2i64..6, e in -1i64..2, f in 3i64..7, bound in 0i64..12) {
            let g = alloc::vec![alloc::vec![a, b, 0], alloc::vec![b, c, e], alloc::vec![0, e, f]];
            prop_assume!(Enumerator::new(&g).is_ok());
            let en = Enumerator::new(&g).unwrap();
            let mut got = en.enumerate(None, bound, 1_000_000).unwrap();
            got.sort();
            prop_assert_eq!(got, naive(&g, None, bound, 6));
        }
    }
}
