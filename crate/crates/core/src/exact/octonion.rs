use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use super::DyadicRational as Dy;
use crate::error::{Error, Result};

/// Sign and basis index of `e_a * e_b`, index 0 is the real unit and
/// `1 + t` is `i_t`.
const fn build_table() -> [[(i8, u8); 8]; 8] {
    let mut t = [[(0i8, 0u8); 8]; 8];
    let mut a = 0;
    while a < 8 {
        t[0][a] = (1, a as u8);
        t[a][0] = (1, a as u8);
        a += 1;
    }
    let mut k = 0;
    while k < 7 {
        t[1 + k][1 + k] = (-1, 0);
        let line = [k % 7, (k + 1) % 7, (k + 3) % 7];
        let mut r = 0;
        while r < 3 {
            let x = line[r];
            let y = line[(r + 1) % 3];
            let z = line[(r + 2) % 3];
            t[1 + x][1 + y] = (1, 1 + z as u8);
            t[1 + y][1 + x] = (-1, 1 + z as u8);
            r += 1;
        }
        k += 1;
    }
    t
}

/// Multiplication table with `i_t i_{t+1} = i_{t+3}`.
pub const MUL_TABLE: [[(i8, u8); 8]; 8] = build_table();

/// An octonion with dyadic coefficients over `1, i_0, ..., i_6`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Octonion(pub [Dy; 8]);

impl Octonion {
    pub fn zero() -> Self {
        Octonion(Default::default())
    }

    pub fn real(x: i64) -> Self {
        let mut o = Octonion::zero();
        o.0[0] = Dy::from_int(x);
        o
    }

    pub fn one() -> Self {
        Octonion::real(1)
    }

    /// The unit `i_t`.
    pub fn unit(t: usize) -> Self {
        let mut o = Octonion::zero();
        o.0[1 + t % 7] = Dy::one();
        o
    }

    pub fn from_ints(c: [i64; 8]) -> Self {
        Octonion(c.map(Dy::from_int))
    }

    /// Coefficients given as numerators over 2.
    pub fn from_halves(c: [i64; 8]) -> Self {
        Octonion(c.map(|x| Dy::new(x, 1)))
    }

    /// s = (-1 + i_0 + ... + i_6)/2.
    pub fn s() -> Self {
        Octonion::from_halves([-1, 1, 1, 1, 1, 1, 1, 1])
    }

    pub fn s_bar() -> Self {
        Octonion::s().conj()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn conj(&self) -> Self {
        let mut o = self.clone();
        for c in o.0.iter_mut().skip(1) {
            *c = -&*c;
        }
        o
    }

    pub fn norm(&self) -> Dy {
        self.0.iter().fold(Dy::zero(), |acc, c| &acc + &(c * c))
    }

    /// Conjugate and norm together.
    pub fn conj_norm(&self) -> (Self, Dy) {
        (self.conj(), self.norm())
    }

    pub fn re(&self) -> &Dy {
        &self.0[0]
    }

    pub fn scale(&self, k: &Dy) -> Self {
        Octonion(core::array::from_fn(|i| &self.0[i] * k))
    }

    /// Inverse `conj / norm`; only defined when the norm is a power of 2 times
    /// an odd divisor of every coefficient.
    pub fn inverse(&self) -> Result<Self> {
        let (c, n) = self.conj_norm();
        let mut out = Octonion::zero();
        for i in 0..8 {
            out.0[i] = c.0[i].checked_div(&n)?;
        }
        Ok(out)
    }

    /// Image under `i_t -> i_{t+k}`.
    pub fn rotate(&self, k: usize) -> Self {
        let mut o = Octonion::zero();
        o.0[0] = self.0[0].clone();
        for t in 0..7 {
            o.0[1 + (t + k) % 7] = self.0[1 + t].clone();
        }
        o
    }

    /// Coefficients times 2, if they are all integers.
    pub fn doubled(&self) -> Option<[i64; 8]> {
        let mut out = [0i64; 8];
        for i in 0..8 {
            out[i] = self.0[i].scaled_int(1)?;
        }
        Some(out)
    }

    pub fn from_doubled(c: &[i64]) -> Self {
        Octonion(core::array::from_fn(|i| Dy::new(c[i], 1)))
    }
}

/// Product under the fixed table.
pub fn oct_mul(a: &Octonion, b: &Octonion) -> Octonion {
    let mut r = Octonion::zero();
    for i in 0..8 {
        if a.0[i].is_zero() {
            continue;
        }
        for j in 0..8 {
            if b.0[j].is_zero() {
                continue;
            }
            let (sg, k) = MUL_TABLE[i][j];
            let p = &a.0[i] * &b.0[j];
            let k = k as usize;
            r.0[k] = if sg > 0 { &r.0[k] + &p } else { &r.0[k] - &p };
        }
    }
    r
}

impl Mul for &Octonion {
    type Output = Octonion;
    fn mul(self, rhs: &Octonion) -> Octonion {
        oct_mul(self, rhs)
    }
}

impl Add for &Octonion {
    type Output = Octonion;
    fn add(self, rhs: &Octonion) -> Octonion {
        Octonion(core::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl Sub for &Octonion {
    type Output = Octonion;
    fn sub(self, rhs: &Octonion) -> Octonion {
        Octonion(core::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl Neg for &Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion(core::array::from_fn(|i| -&self.0[i]))
    }
}

/// Human form such as `-2-i0+i3+1/2^1i5`; zero prints as `0`.
impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let unit = if k == 0 { String::new() } else { alloc::format!("i{}", k - 1) };
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            if k == 0 || mag != Dy::one() {
                write!(f, "{}", mag)?;
            }
            f.write_str(&unit)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", super::dyadic::fmt_list(&self.0))
    }
}

/// Parses sums of terms like `-2`, `+i3`, `2i4`, `-5i6`.
impl FromStr for Octonion {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = |r: &str| Error::Parse { line: 0, reason: alloc::format!("{r} in octonion {s:?}") };
        let t: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(bad("empty"));
        }
        let mut o = Octonion::zero();
        let mut i = 0;
        while i < t.len() {
            let mut sign = 1i64;
            if t[i] == '+' || t[i] == '-' {
                if t[i] == '-' {
                    sign = -1;
                }
                i += 1;
            }
            let start = i;
            while i < t.len() && t[i].is_ascii_digit() {
                i += 1;
            }
            let coef: i64 = if i > start { t[start..i].iter().collect::<String>().parse().map_err(|_| bad("bad coefficient"))? } else { 1 };
            let idx = if i < t.len() && t[i] == 'i' {
                i += 1;
                let d = t.get(i).and_then(|c| c.to_digit(10)).ok_or_else(|| bad("bad unit"))?;
                if d > 6 {
                    return Err(bad("unit index out of range"));
                }
                i += 1;
                1 + d as usize
            } else {
                if i == start {
                    return Err(bad("dangling sign"));
                }
                0
            };
            o.0[idx] = &o.0[idx] + &Dy::from_int(sign * coef);
        }
        Ok(o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn oct() -> impl Strategy<Value = Octonion> {
        proptest::array::uniform8(-6i64..6).prop_map(Octonion::from_halves)
    }

    #[test]
    fn i0_i1_is_i3() {
        assert_eq!(&Octonion::unit(0) * &Octonion::unit(1), Octonion::unit(3));
        assert_eq!(&Octonion::unit(1) * &Octonion::unit(0), -&Octonion::unit(3));
    }

    #[test]
    fn unit_squares_and_anticommutation() {
        for a in 0..7 {
            assert_eq!(&Octonion::unit(a) * &Octonion::unit(a), Octonion::real(-1));
            for b in 0..7 {
                if a != b {
                    let ab = &Octonion::unit(a) * &Octonion::unit(b);
                    let ba = &Octonion::unit(b) * &Octonion::unit(a);
                    assert_eq!(ab, -&ba);
                }
            }
        }
    }

    #[test]
    fn conj_norm_examples() {
        let (c, n) = Octonion::unit(3).conj_norm();
        assert_eq!(c, -&Octonion::unit(3));
        assert_eq!(n, Dy::one());
        let s = Octonion::s();
        let (sb, n) = s.conj_norm();
        assert_eq!(sb, Octonion::s_bar());
        assert_eq!(n, Dy::from_int(2));
        assert_eq!(&s * &sb, Octonion::real(2));
        let (c, n) = Octonion::real(4).conj_norm();
        assert_eq!(c, Octonion::real(4));
        assert_eq!(n, Dy::from_int(16));
    }

    #[test]
    fn rotation_is_an_automorphism() {
        for a in 0..8 {
            for b in 0..8 {
                let mut x = Octonion::zero();
                x.0[a] = Dy::one();
                let mut y = Octonion::zero();
                y.0[b] = Dy::one();
                assert_eq!((&x * &y).rotate(1), &x.rotate(1) * &y.rotate(1));
            }
        }
        assert_eq!(Octonion::s().rotate(3), Octonion::s());
    }

    #[test]
    fn parse_and_print() {
        let x: Octonion = "-2-i0+i3+i5+i6".parse().unwrap();
        assert_eq!(x, Octonion::from_ints([-2, -1, 0, 0, 1, 0, 1, 1]));
        assert_eq!(x.to_string(), "-2-i0+i3+i5+i6");
        let y: Octonion = "2i4+i0+i3-i5+i6".parse().unwrap();
        assert_eq!(y.to_string(), "i0+i3+2i4-i5+i6");
        assert!("i9".parse::<Octonion>().is_err());
        assert_eq!(Octonion::s().to_string(), "-1/2^1+1/2^1i0+1/2^1i1+1/2^1i2+1/2^1i3+1/2^1i4+1/2^1i5+1/2^1i6");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn composition_law(a in oct(), b in oct()) {
            prop_assert_eq!((&a * &b).norm(), &a.norm() * &b.norm());
        }

        #[test]
        fn conjugation_reverses(a in oct(), b in oct()) {
            prop_assert_eq!((&a * &b).conj(), &b.conj() * &a.conj());
            prop_assert_eq!((&a * &b).re().clone(), (&b * &a).re().clone());
        }

        #[test]
        fn alternative(a in oct(), b in oct()) {
            prop_assert_eq!(&a * &(&a * &b), &(&a * &a) * &b);
            prop_assert_eq!(&(&b * &a) * &a, &b * &(&a * &a));
        }

        #[test]
        fn identity_and_real_conj(a in oct()) {
            prop_assert_eq!(&Octonion::one() * &a, a.clone());
            let sum = &a + &a.conj();
            prop_assert!(sum.0[1..].iter().all(|c| c.is_zero()));
        }
    }
}
