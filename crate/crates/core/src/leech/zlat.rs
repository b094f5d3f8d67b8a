//! Integer lattices: Hermite normal form, determinant, exact inverse.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn to_big(rows: &[Vec<i64>]) -> IntMatrix {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn to_i64(rows: &IntMatrix) -> Option<Vec<Vec<i64>>> {
    rows.iter().map(|r| r.iter().map(|x| x.to_i64()).collect()).collect()
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn axpy(a: &mut [BigInt], q: &BigInt, b: &[BigInt]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x -= q * y;
    }
}

/// Row-style Hermite normal form: a basis of the row lattice in echelon form
/// with positive pivots and reduced entries above them.
pub fn hnf(rows: &[Vec<BigInt>]) -> IntMatrix {
    let mut a: IntMatrix = rows.to_vec();
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        while let Some(p) = (r..m).filter(|&i| !a[i][c].is_zero()).min_by_key(|&i| a[i][c].abs()) {
            a.swap(r, p);
            let mut done = true;
            for i in r + 1..m {
                if !a[i][c].is_zero() {
                    let q = a[i][c].div_floor(&a[r][c]);
                    let (head, tail) = a.split_at_mut(i);
                    axpy(&mut tail[0], &q, &head[r]);
                    if !a[i][c].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if a[r][c].is_zero() {
            continue;
        }
        if a[r][c].is_negative() {
            for x in &mut a[r] {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let q = a[i][c].div_floor(&a[r][c]);
            let (head, tail) = a.split_at_mut(r);
            axpy(&mut head[i], &q, &tail[0]);
        }
        r += 1;
    }
    a.truncate(r);
    a
}

pub fn gram(rows: &IntMatrix) -> IntMatrix {
    rows.iter().map(|a| rows.iter().map(|b| dot(a, b)).collect()).collect()
}

/// Determinant by fraction-free elimination.
pub fn det(m: &IntMatrix) -> BigInt {
    let n = m.len();
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else { return BigInt::zero() };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * prev
}

/// Exact inverse of a nonsingular integer matrix as `(num, den)` with
/// `m^-1 = num / den`, den > 0 minimal.
pub fn inverse(m: &IntMatrix) -> Result<(IntMatrix, BigInt)> {
    let n = m.len();
    // Gauss-Jordan over fractions kept as (numerator rows, row denominators)
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i][k].is_zero()).ok_or(Error::DivisionByZero("singular matrix"))?;
        a.swap(p, k);
        for i in 0..n {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let (f, g) = (a[k][k].clone(), a[i][k].clone());
            for j in 0..2 * n {
                a[i][j] = &a[i][j] * &f - &a[k][j] * &g;
            }
            let c = a[i].iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            if !c.is_zero() && !c.is_one() {
                for x in &mut a[i] {
                    *x /= &c;
                }
            }
        }
    }
    // row i now reads a[i][i] * e_i | row of a[i][i] * inverse
    let den = (0..n).fold(BigInt::one(), |acc, i| acc.lcm(&a[i][i]));
    let num = (0..n)
        .map(|i| {
            let f = &den / &a[i][i];
            (n..2 * n).map(|j| &a[i][j] * &f).collect()
        })
        .collect::<IntMatrix>();
    let (num, den) = if den.is_negative() { (num.into_iter().map(|r| r.into_iter().map(|x| -x).collect()).collect(), -den) } else { (num, den) };
    let g = num.iter().flatten().fold(den.clone(), |acc, x| acc.gcd(x));
    Ok((num.into_iter().map(|r| r.into_iter().map(|x| x / &g).collect()).collect(), den / g))
}

/// Solve `c * basis = v` for integer `c` given the inverse of the basis;
/// `None` if `c` is not integral.
pub fn integer_coords(inv: &(IntMatrix, BigInt), v: &[BigInt]) -> Option<Vec<BigInt>> {
    let (num, den) = inv;
    (0..num[0].len())
        .map(|j| {
            let s: BigInt = v.iter().zip(num.iter()).map(|(x, row)| x * &row[j]).sum();
            let (q, r) = s.div_rem(den);
            r.is_zero().then_some(q)
        })
        .collect()
}
