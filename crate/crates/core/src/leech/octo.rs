//! The octonionic model: triples over the ring L with congruence
//! conditions through s and its conjugate, and the Conway-group generators
//! acting on row vectors.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::model::{LeechLattice, DIM};
use super::zlat;
use crate::error::{Error, Result};
use crate::exact::f2::{F2Matrix, F2Vec, Quotient, Subspace};
use crate::exact::{oct_mul, DyadicRational, Octonion};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OctTriple(pub [Octonion; 3]);

impl OctTriple {
    pub fn new(x: Octonion, y: Octonion, z: Octonion) -> Self {
        OctTriple([x, y, z])
    }

    /// Parses three comma-separated octonions, e.g. `(4, 0, 0)`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = t.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::Parse { line: 0, reason: alloc::format!("expected three coordinates in {s:?}") });
        }
        Ok(OctTriple([parts[0].parse()?, parts[1].parse()?, parts[2].parse()?]))
    }

    pub fn zero() -> Self {
        OctTriple([Octonion::zero(), Octonion::zero(), Octonion::zero()])
    }

    pub fn scale(&self, k: &DyadicRational) -> Self {
        OctTriple(self.0.clone().map(|c| c.scale(k)))
    }

    /// `a * (x, y, z)` coordinatewise on the left.
    pub fn left_scalar(&self, a: &Octonion) -> Self {
        OctTriple(self.0.clone().map(|c| oct_mul(a, &c)))
    }

    pub fn add(&self, o: &OctTriple) -> Self {
        OctTriple(core::array::from_fn(|i| &self.0[i] + &o.0[i]))
    }

    /// Octonionic norm times 4, the standard scaling.
    pub fn std_norm(&self) -> Option<i64> {
        self.to_ambient().map(|v| v.iter().map(|x| x * x).sum())
    }

    /// Coefficients doubled, concatenated.
    pub fn to_ambient(&self) -> Option<Vec<i64>> {
        let mut v = Vec::with_capacity(DIM);
        for c in &self.0 {
            v.extend_from_slice(&c.doubled()?);
        }
        Some(v)
    }

    pub fn from_ambient(v: &[i64]) -> Self {
        OctTriple(core::array::from_fn(|k| Octonion::from_doubled(&v[8 * k..8 * k + 8])))
    }
}

impl fmt::Display for OctTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Debug for OctTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn oct(s: &str) -> Octonion {
    s.parse().expect("static octonion literal")
}

/// Membership in L given doubled coefficients: all of one parity, with the
/// sum 0 mod 4 (even case) or 2 mod 4 (odd case).
pub fn in_l_doubled(d: &[i64]) -> bool {
    let p = d[0].rem_euclid(2);
    if d.iter().any(|x| x.rem_euclid(2) != p) {
        return false;
    }
    let sum: i64 = d.iter().sum();
    sum.rem_euclid(4) == 2 * p
}

pub fn in_l(a: &Octonion) -> bool {
    a.doubled().is_some_and(|d| in_l_doubled(&d))
}

/// Doubled basis of L: the D8 roots and (-1, 1^7)/2.
pub fn l_basis() -> Vec<[i64; 8]> {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for i in 0..7 {
        let mut r = alloc::vec![0i64; 8];
        r[i] = 2;
        r[i + 1] = -2;
        rows.push(r);
    }
    let mut r = alloc::vec![0i64; 8];
    r[0] = 2;
    r[1] = 2;
    rows.push(r);
    let mut h = alloc::vec![1i64; 8];
    h[0] = -1;
    rows.push(h);
    let b = zlat::to_i64(&zlat::hnf(&zlat::to_big(&rows))).expect("small entries");
    b.into_iter().map(|r| core::array::from_fn(|i| r[i])).collect()
}

/// `a` lies in `L u` where `u` has norm 2: `a u-bar / 2` in L.
fn in_l_times(a: &Octonion, u: &Octonion) -> bool {
    in_l(&oct_mul(a, &u.conj()).scale(&DyadicRational::half()))
}

/// Direct membership test: x, y, z in L; pairwise sums in L s-bar; the
/// total in L s.
pub fn oct_member(v: &OctTriple) -> bool {
    let [x, y, z] = &v.0;
    let (s, sb) = (Octonion::s(), Octonion::s_bar());
    v.0.iter().all(in_l) && [x + y, y + z, x + z].iter().all(|a| in_l_times(a, &sb)) && in_l_times(&(&(x + y) + z), &s)
}

/// L/2L coordinates of a doubled L-element.
struct LMod2 {
    basis: Vec<[i64; 8]>,
    inv: (zlat::IntMatrix, BigInt),
}

impl LMod2 {
    fn new() -> Self {
        let basis = l_basis();
        let rows: Vec<Vec<i64>> = basis.iter().map(|r| r.to_vec()).collect();
        let inv = zlat::inverse(&zlat::to_big(&rows)).expect("L basis is nonsingular");
        LMod2 { basis, inv }
    }

    fn phi(&self, a: &Octonion) -> Result<F2Vec> {
        let d = a.doubled().ok_or(Error::NotInLattice)?;
        let big: Vec<BigInt> = d.iter().map(|&x| BigInt::from(x)).collect();
        let c = zlat::integer_coords(&self.inv, &big).ok_or(Error::NotInLattice)?;
        Ok(F2Vec::from_bits(&c.iter().map(|x| x.to_i64().unwrap().rem_euclid(2) == 1).collect::<Vec<_>>()))
    }

    fn elem(&self, i: usize) -> Octonion {
        Octonion::from_doubled(&self.basis[i])
    }
}

/// Subspace of (L/2L)^3 cut out by the congruences, after checking that
/// L s and L s-bar lie in L (so the conditions only see classes mod 2L).
fn congruence_space(lm: &LMod2) -> Result<Subspace> {
    let (s, sb) = (Octonion::s(), Octonion::s_bar());
    let mut s1 = Vec::new();
    let mut s2 = Vec::new();
    for i in 0..8 {
        let b = lm.elem(i);
        let (bs, bsb) = (oct_mul(&b, &s), oct_mul(&b, &sb));
        if !in_l(&bs) || !in_l(&bsb) {
            return Err(Error::Calibration(String::from("L is not closed under right multiplication by s and s-bar")));
        }
        s1.push(lm.phi(&bsb)?);
        s2.push(lm.phi(&bs)?);
    }
    let full = Subspace::full(8);
    let q1 = Quotient::new(&full, &Subspace::span(8, s1));
    let q2 = Quotient::new(&full, &Subspace::span(8, s2));
    let cols = 3 * q1.dim() + q2.dim();
    let mut rows = Vec::new();
    for k in 0..3 {
        for i in 0..8 {
            let mut blocks = [F2Vec::zero(8), F2Vec::zero(8), F2Vec::zero(8)];
            blocks[k] = F2Vec::unit(8, i);
            let [x, y, z] = &blocks;
            let r = q1.project(&x.xor(y)).concat(&q1.project(&y.xor(z))).concat(&q1.project(&x.xor(z))).concat(&q2.project(&x.xor(y).xor(z)));
            rows.push(r);
        }
    }
    Ok(Subspace::span(DIM, F2Matrix::from_rows(cols, rows).left_kernel()))
}

/// Lifts of the congruence space plus 2L^3.
pub fn oct_generators() -> Result<Vec<Vec<i64>>> {
    let lm = LMod2::new();
    let w = congruence_space(&lm)?;
    if w.dim() != 12 {
        return Err(Error::Calibration(alloc::format!("congruence space has dimension {}", w.dim())));
    }
    let mut gens: Vec<Vec<i64>> = Vec::new();
    for c in w.basis() {
        let mut v = alloc::vec![0i64; DIM];
        for j in c.ones() {
            let (k, i) = (j / 8, j % 8);
            for t in 0..8 {
                v[8 * k + t] += lm.basis[i][t];
            }
        }
        gens.push(v);
    }
    for k in 0..3 {
        for i in 0..8 {
            let mut v = alloc::vec![0i64; DIM];
            for t in 0..8 {
                v[8 * k + t] = 2 * lm.basis[i][t];
            }
            gens.push(v);
        }
    }
    if let Some(g) = gens.iter().find(|g| !oct_member(&OctTriple::from_ambient(g))) {
        return Err(Error::Calibration(alloc::format!("generator {:?} fails the direct test", g)));
    }
    Ok(gens)
}

pub fn build_oct_lattice() -> Result<LeechLattice> {
    LeechLattice::from_generators(&oct_generators()?)
}

/// Conway-group generators acting on row vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConwayGen {
    /// i_t -> i_{t+1} in every coordinate
    Sigma7,
    /// coordinate j of the image is coordinate p[j] of the source
    CoordPerm([usize; 3]),
    SignChange([bool; 3]),
    RightMul {
        by: Octonion,
        coords: [bool; 3],
    },
    LeftMul {
        by: Octonion,
        coords: [bool; 3],
    },
    Matrix(Box<[[Octonion; 3]; 3]>),
}

pub fn g1() -> ConwayGen {
    let (s, sb) = (Octonion::s(), Octonion::s_bar());
    let (one, m1, z) = (Octonion::one(), Octonion::real(-1), Octonion::zero());
    ConwayGen::Matrix(Box::new([[z, sb.clone(), sb], [s.clone(), m1.clone(), one.clone()], [s, one, m1]]))
}

/// g1 as displayed scales norms by 4; half of it is the isometry used on
/// Lambda/2Lambda.
pub fn g1_half() -> ConwayGen {
    match g1() {
        ConwayGen::Matrix(m) => ConwayGen::Matrix(Box::new(m.map(|r| r.map(|e| e.scale(&DyadicRational::half()))))),
        _ => unreachable!(),
    }
}

/// The matrix (1/2)(-1 1 s / 1 -1 s / s-bar s-bar 0).
pub fn m2() -> ConwayGen {
    let h = DyadicRational::half();
    let (s, sb) = (Octonion::s(), Octonion::s_bar());
    let (one, m1, z) = (Octonion::one(), Octonion::real(-1), Octonion::zero());
    let m = [[m1.clone(), one.clone(), s.clone()], [one, m1, s], [sb.clone(), sb, z]];
    ConwayGen::Matrix(Box::new(m.map(|r| r.map(|e| e.scale(&h)))))
}

pub fn apply_gen(g: &ConwayGen, v: &OctTriple) -> OctTriple {
    let [x, y, z] = &v.0;
    match g {
        ConwayGen::Sigma7 => OctTriple([x.rotate(1), y.rotate(1), z.rotate(1)]),
        ConwayGen::CoordPerm(p) => OctTriple(core::array::from_fn(|j| v.0[p[j]].clone())),
        ConwayGen::SignChange(m) => OctTriple(core::array::from_fn(|j| if m[j] { -&v.0[j] } else { v.0[j].clone() })),
        ConwayGen::RightMul { by, coords } => OctTriple(core::array::from_fn(|j| if coords[j] { oct_mul(&v.0[j], by) } else { v.0[j].clone() })),
        ConwayGen::LeftMul { by, coords } => OctTriple(core::array::from_fn(|j| if coords[j] { oct_mul(by, &v.0[j]) } else { v.0[j].clone() })),
        ConwayGen::Matrix(m) => OctTriple(core::array::from_fn(|j| {
            let a = oct_mul(x, &m[0][j]);
            let b = oct_mul(y, &m[1][j]);
            let c = oct_mul(z, &m[2][j]);
            &(&a + &b) + &c
        })),
    }
}

pub fn apply_word(word: &[ConwayGen], v: &OctTriple) -> OctTriple {
    word.iter().fold(v.clone(), |acc, g| apply_gen(g, &acc))
}

/// The generators whose lattice preservation is certified: sigma7, the
/// coordinate permutations and sign changes, right multiplication of the
/// last two coordinates by units, g1 and m2.
pub fn declared_generators() -> Vec<(String, ConwayGen)> {
    let mut out = alloc::vec![
        (String::from("sigma7"), ConwayGen::Sigma7),
        (String::from("perm(1 2)"), ConwayGen::CoordPerm([1, 0, 2])),
        (String::from("perm(1 2 3)"), ConwayGen::CoordPerm([1, 2, 0])),
        (String::from("sign(1)"), ConwayGen::SignChange([true, false, false])),
        (String::from("g1"), g1()),
        (String::from("g1/2"), g1_half()),
        (String::from("m2"), m2()),
    ];
    for t in 0..7 {
        out.push((alloc::format!("right i{t} on (2,3)"), ConwayGen::RightMul { by: Octonion::unit(t), coords: [false, true, true] }));
    }
    out
}

/// Image of the lattice basis rows under `g`, each tested for membership.
pub fn preserves_lattice(l: &LeechLattice, g: &ConwayGen) -> bool {
    l.basis().iter().all(|r| {
        let img = apply_gen(g, &OctTriple::from_ambient(r));
        img.to_ambient().is_some_and(|a| l.is_member(&a))
    })
}

/// Matrix of `g` on Lambda/2Lambda (row vectors, class c -> c M).
pub fn mod2_matrix(l: &LeechLattice, g: &ConwayGen) -> Result<F2Matrix> {
    let rows = l
        .basis()
        .iter()
        .map(|r| {
            let img = apply_gen(g, &OctTriple::from_ambient(r)).to_ambient().ok_or(Error::NotInLattice)?;
            l.class(&img)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(F2Matrix::from_rows(DIM, rows))
}

/// The explicit vectors quoted in the worked examples and in the pair-type
/// discussion, by name.
pub fn quoted_vectors() -> Vec<(&'static str, OctTriple)> {
    let two = DyadicRational::from_int(2);
    let x = oct("-2-i0+i3+i5+i6");
    let z = Octonion::zero();
    let (s, sb) = (Octonion::s(), Octonion::s_bar());
    alloc::vec![
        ("(4,0,0)", OctTriple::new(Octonion::real(4), z.clone(), z.clone())),
        ("2(-1+i0+i1+i3,0,0)", OctTriple::new(oct("-1+i0+i1+i3"), z.clone(), z.clone()).scale(&two)),
        ("(-2-i0+i3+i5+i6)(1,1,0)", OctTriple::new(x.clone(), x.clone(), z.clone())),
        ("2(s-bar,1,1)", OctTriple::new(sb.clone(), Octonion::one(), Octonion::one()).scale(&two)),
        ("2(s-bar,1,-1)", OctTriple::new(sb, Octonion::one(), Octonion::real(-1)).scale(&two)),
        ("(-2-i0+i3+i5+i6,2i4+i0+i3-i5+i6,0)", OctTriple::new(x, oct("2i4+i0+i3-i5+i6"), z.clone())),
        ("(-2-i1+i4+i6+i0,2i5+i1+i4-i6+i0,0)", OctTriple::new(oct("-2-i1+i4+i6+i0"), oct("2i5+i1+i4-i6+i0"), z.clone())),
        ("2(1+i0+i1+i3,0,0)", OctTriple::new(oct("1+i0+i1+i3"), z.clone(), z.clone()).scale(&two)),
        ("(1+i0)(s-2,s,s)", OctTriple::new(&s - &Octonion::real(2), s.clone(), s).left_scalar(&oct("1+i0"))),
        ("(-i0+i2+i3-i6,-1-i0-i2-i4,2-i1-i2+i3+i4)", OctTriple::new(oct("-i0+i2+i3-i6"), oct("-1-i0-i2-i4"), oct("2-i1-i2+i3+i4"))),
        ("(0,0,4)", OctTriple::new(z.clone(), z, Octonion::real(4))),
    ]
}

pub fn quoted_vector(name: &str) -> OctTriple {
    quoted_vectors().into_iter().find(|(n, _)| *n == name).map(|(_, v)| v).expect("known quoted vector")
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::leech::model::{is_orthogonal_frame, norm};
    use proptest::prelude::*;
    use std::sync::OnceLock;

    pub(crate) fn lattice() -> &'static LeechLattice {
        static L: OnceLock<LeechLattice> = OnceLock::new();
        L.get_or_init(|| build_oct_lattice().unwrap())
    }

    fn amb(v: &OctTriple) -> Vec<i64> {
        v.to_ambient().unwrap()
    }

    #[test]
    fn l_is_the_expected_ring_coset() {
        assert!(in_l(&Octonion::s()));
        assert!(!in_l(&Octonion::s_bar()));
        assert!(!in_l(&Octonion::one()));
        assert!(l_basis().iter().all(|r| in_l_doubled(r)));
        let g = zlat::gram(&zlat::to_big(&l_basis().iter().map(|r| r.to_vec()).collect::<Vec<_>>()));
        assert_eq!(zlat::det(&g), BigInt::from(1u32 << 16));
    }

    #[test]
    fn lattice_invariants() {
        let l = lattice();
        assert_eq!(l.gram_u_det(), BigInt::from(1));
        assert_eq!(l.short_vectors(31).unwrap(), alloc::vec![alloc::vec![0i64; DIM]]);
        assert!(l.basis().iter().all(|r| oct_member(&OctTriple::from_ambient(r))));
        let one = OctTriple::new(Octonion::one(), Octonion::zero(), Octonion::zero());
        assert!(!oct_member(&one));
        assert!(!l.is_member(&amb(&one)));
    }

    #[test]
    fn four_zero_zero_is_a_cross() {
        let l = lattice();
        let v = amb(&quoted_vector("(4,0,0)"));
        assert!(l.is_member(&v));
        assert_eq!(l.class_type(&v).unwrap(), 4);
        let f = l.cross_frame(&l.class(&v).unwrap()).unwrap();
        assert!(is_orthogonal_frame(&f));
    }

    #[test]
    fn sigma7_fixes_real_vectors() {
        let v = quoted_vector("(4,0,0)");
        assert_eq!(apply_gen(&ConwayGen::Sigma7, &v), v);
    }

    #[test]
    fn declared_generators_preserve_the_lattice() {
        let l = lattice();
        for (name, g) in declared_generators() {
            assert!(preserves_lattice(l, &g), "{name}");
        }
    }

    #[test]
    fn m2_maps_the_doubled_x_to_the_displayed_vector() {
        let v = quoted_vector("(-2-i0+i3+i5+i6)(1,1,0)");
        let img = apply_gen(&m2(), &v);
        assert_eq!(img, OctTriple::parse("(0, 0, -2i0-2i3-2i5-2i6)").unwrap());
    }

    #[test]
    fn quoted_vectors_against_direct_test() {
        let l = lattice();
        for (name, v) in quoted_vectors() {
            let a = amb(&v);
            assert_eq!(oct_member(&v), l.is_member(&a), "{name}");
        }
        assert!(!oct_member(&quoted_vector("2(s-bar,1,1)")));
        let alt = OctTriple::new(Octonion::s(), Octonion::one(), Octonion::one()).scale(&DyadicRational::from_int(2));
        assert!(oct_member(&alt));
    }

    #[test]
    fn mod2_matrices_have_expected_orders() {
        let l = lattice();
        let s = mod2_matrix(l, &ConwayGen::Sigma7).unwrap();
        assert_eq!(s.order(100), Some(7));
        assert!(mod2_matrix(l, &g1()).unwrap().rank() == 0);
        let g = mod2_matrix(l, &g1_half()).unwrap();
        assert!(g.inverse().is_some());
        assert!(g.mul(&s) == s.mul(&g));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn basis_membership_matches_direct_test(c in proptest::collection::vec(-2i64..3, DIM), k in 0usize..DIM, d in -2i64..3) {
            let l = lattice();
            let mut v = l.from_coords(&c);
            prop_assert!(oct_member(&OctTriple::from_ambient(&v)));
            v[k] += d;
            prop_assert_eq!(oct_member(&OctTriple::from_ambient(&v)), l.is_member(&v));
        }

        #[test]
        fn type_constant_on_generator_orbits(c in proptest::collection::vec(-1i64..2, DIM), gi in 0usize..7) {
            let l = lattice();
            let v = l.from_coords(&c);
            let cls = l.class(&v).unwrap();
            prop_assume!(!cls.is_zero());
            let (name, g) = &declared_generators()[gi];
            prop_assume!(name != "g1");
            let w = amb(&apply_gen(g, &OctTriple::from_ambient(&v)));
            prop_assert_eq!(norm(&v), norm(&w));
            prop_assert_eq!(l.class_type(&v).unwrap(), l.class_type(&w).unwrap());
        }
    }
}
