//! Ordinary characters of 2^3:7 with values in Z[zeta_7], and the
//! multiplicity enumeration for faithful 24-dimensional representations.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::ops::{Add, Mul};

use crate::perm::finite::FiniteGroup;

/// Element of Z[zeta] with zeta^7 = 1, stored as coefficients of
/// zeta^0..zeta^6 normalized so that the last coefficient is zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cyc7([i64; 7]);

impl Cyc7 {
    pub fn new(mut c: [i64; 7]) -> Self {
        let t = c[6];
        for x in &mut c {
            *x -= t;
        }
        Cyc7(c)
    }

    pub fn int(n: i64) -> Self {
        let mut c = [0; 7];
        c[0] = n;
        Cyc7(c)
    }

    pub fn zeta(k: u64) -> Self {
        let mut c = [0; 7];
        c[(k % 7) as usize] = 1;
        Cyc7::new(c)
    }

    pub fn conj(self) -> Self {
        let mut c = [0; 7];
        for (k, &v) in self.0.iter().enumerate() {
            c[(7 - k) % 7] += v;
        }
        Cyc7::new(c)
    }

    pub fn as_int(self) -> Option<i64> {
        self.0[1..].iter().all(|&v| v == 0).then_some(self.0[0])
    }

    /// Exact division by an integer, if possible.
    pub fn div_int(self, d: i64) -> Option<Self> {
        self.0.iter().all(|v| v % d == 0).then(|| Cyc7(self.0.map(|v| v / d)))
    }
}

impl Add for Cyc7 {
    type Output = Cyc7;
    fn add(self, o: Cyc7) -> Cyc7 {
        let mut c = self.0;
        for k in 0..7 {
            c[k] += o.0[k];
        }
        Cyc7::new(c)
    }
}

impl Mul for Cyc7 {
    type Output = Cyc7;
    fn mul(self, o: Cyc7) -> Cyc7 {
        let mut c = [0; 7];
        for i in 0..7 {
            for j in 0..7 {
                c[(i + j) % 7] += self.0[i] * o.0[j];
            }
        }
        Cyc7::new(c)
    }
}

/// Character table of a group E:<x> with E elementary of order 8.
#[derive(Clone, Debug)]
pub struct CharTable2Cubed7 {
    pub class_sizes: Vec<usize>,
    /// `chars[i][c]` is the value of character i on class c
    pub chars: Vec<Vec<Cyc7>>,
    pub degrees: Vec<i64>,
    /// class index of x^j for j = 0..7
    pub power_classes: [usize; 7],
}

impl CharTable2Cubed7 {
    pub fn order(&self) -> usize {
        self.class_sizes.iter().sum()
    }

    /// `<chi_i, chi_j>` times the group order.
    pub fn scaled_inner(&self, i: usize, j: usize) -> Cyc7 {
        let mut acc = Cyc7::int(0);
        for (c, &sz) in self.class_sizes.iter().enumerate() {
            acc = acc + Cyc7::int(sz as i64) * self.chars[i][c] * self.chars[j][c].conj();
        }
        acc
    }

    /// Orthonormality of all characters and the count of classes.
    pub fn is_orthonormal(&self) -> bool {
        let n = self.order() as i64;
        self.chars.len() == self.class_sizes.len()
            && (0..self.chars.len()).all(|i| (0..self.chars.len()).all(|j| self.scaled_inner(i, j) == Cyc7::int(if i == j { n } else { 0 })))
    }

    pub fn degree_square_sum(&self) -> i64 {
        self.degrees.iter().map(|d| d * d).sum()
    }

    /// dim of the x-fixed space, (1/7) sum_j chi(x^j), for a sum of characters.
    pub fn fixed_dim(&self, chars: &[usize]) -> Option<i64> {
        let mut acc = Cyc7::int(0);
        for &i in chars {
            for j in 0..7 {
                acc = acc + self.chars[i][self.power_classes[j]];
            }
        }
        acc.div_int(7)?.as_int()
    }

    /// Character indices forming the rational irreducibles of degrees 1, 6, 7.
    pub fn rational_irreducibles(&self) -> [Vec<usize>; 3] {
        let deg = |d: i64| (0..self.degrees.len()).filter(|&i| self.degrees[i] == d).collect::<Vec<_>>();
        let lin = deg(1);
        let triv: Vec<usize> = lin.iter().copied().filter(|&i| self.chars[i].iter().all(|v| *v == Cyc7::int(1))).collect();
        let six: Vec<usize> = lin.iter().copied().filter(|i| !triv.contains(i)).collect();
        [triv, six, deg(7)]
    }
}

/// Compute the table from conjugacy classes, the 7 linear characters
/// pulled back from G/E, and the character induced from a nontrivial
/// linear character of E.
pub fn char_table_2cubed7<G: FiniteGroup + ?Sized>(g: &G, e: &BTreeSet<G::Elem>, x: &G::Elem) -> CharTable2Cubed7 {
    let els = g.elements();
    assert_eq!(els.len(), 56);
    // conjugacy classes
    let mut class_of: BTreeMap<G::Elem, usize> = BTreeMap::new();
    let mut reps: Vec<G::Elem> = Vec::new();
    let mut class_sizes = Vec::new();
    for a in &els {
        if class_of.contains_key(a) {
            continue;
        }
        let id = reps.len();
        let cls: BTreeSet<G::Elem> = els.iter().map(|h| g.conj(a, h)).collect();
        class_sizes.push(cls.len());
        for c in cls {
            class_of.insert(c, id);
        }
        reps.push(a.clone());
    }
    // coset index j with a in E x^j
    let xpows: Vec<G::Elem> = (0..7).map(|j| g.pow(x, j)).collect();
    let coset = |a: &G::Elem| -> u64 { (0..7u64).find(|&j| e.contains(&g.mul(a, &g.inv(&xpows[j as usize])))).expect("E has index 7") };
    let mut chars = Vec::new();
    let mut degrees = Vec::new();
    for k in 0..7u64 {
        chars.push(reps.iter().map(|r| Cyc7::zeta(k * coset(r))).collect());
        degrees.push(1);
    }
    // a nontrivial linear character of E: -1 off a fixed hyperplane
    let e_list: Vec<&G::Elem> = e.iter().collect();
    let gens_e: Vec<&G::Elem> = e_list.iter().copied().filter(|a| !g.is_identity(a)).take(1).collect();
    let hyper: BTreeSet<G::Elem> = {
        // the subgroup of E avoiding gens_e[0]: any index-2 subgroup not containing it
        let t = gens_e[0];
        let mut best = None;
        for a in &e_list {
            for b in &e_list {
                let h = crate::perm::finite::closure(g, &[(*a).clone(), (*b).clone()], 8).unwrap();
                if h.len() == 4 && !h.contains(t) {
                    best = Some(h);
                }
            }
        }
        best.expect("E is elementary of order 8")
    };
    let psi = |a: &G::Elem| -> i64 {
        if hyper.contains(a) {
            1
        } else {
            -1
        }
    };
    let induced: Vec<Cyc7> = reps
        .iter()
        .map(|r| {
            let s: i64 = els.iter().map(|h| g.conj(r, h)).filter(|c| e.contains(c)).map(|c| psi(&c)).sum();
            Cyc7::int(s / 8)
        })
        .collect();
    degrees.push(induced[class_of[&g.identity()]].as_int().unwrap());
    chars.push(induced);
    let power_classes = core::array::from_fn(|j| class_of[&xpows[j]]);
    CharTable2Cubed7 { class_sizes, chars, degrees, power_classes }
}

/// Multiplicities (a, b, c) of the rational irreducibles of degrees 1, 6, 7.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RepMultiset {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl RepMultiset {
    pub fn dim(&self) -> u32 {
        self.a + 6 * self.b + 7 * self.c
    }

    pub fn is_faithful(&self) -> bool {
        self.c >= 1
    }

    /// Fixed space of x given the fixed dimensions of the three irreducibles.
    pub fn fixed_dim(&self, fixed: [i64; 3]) -> i64 {
        self.a as i64 * fixed[0] + self.b as i64 * fixed[1] + self.c as i64 * fixed[2]
    }
}

/// All faithful multiplicity vectors of total dimension `n`.
pub fn faithful_rep_multisets(n: u32) -> Vec<RepMultiset> {
    let mut out = Vec::new();
    for c in 1..=n / 7 {
        for b in 0..=(n - 7 * c) / 6 {
            out.push(RepMultiset { a: n - 7 * c - 6 * b, b, c });
        }
    }
    out
}
