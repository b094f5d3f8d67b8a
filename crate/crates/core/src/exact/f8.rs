use core::fmt;
use core::ops::{Add, Mul};

use crate::error::{Error, Result};

/// Element of F8 = F2[η]/(η³ + η + 1); bit i is the coefficient of η^i.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct F8(u8);

impl F8 {
    pub const ZERO: F8 = F8(0);
    pub const ONE: F8 = F8(1);
    pub const ETA: F8 = F8(2);

    pub fn new(bits: u8) -> F8 {
        F8(bits & 7)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = F8> {
        (0..8u8).map(F8)
    }

    pub fn nonzero() -> impl Iterator<Item = F8> {
        (1..8u8).map(F8)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn pow(self, mut k: u32) -> F8 {
        let mut base = self;
        let mut acc = F8::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            k >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Result<F8> {
        if self.is_zero() {
            return Err(Error::DivisionByZero("F8"));
        }
        Ok(self.pow(6))
    }
}

impl Add for F8 {
    type Output = F8;
    // characteristic 2
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: F8) -> F8 {
        F8(self.0 ^ rhs.0)
    }
}

impl Mul for F8 {
    type Output = F8;
    fn mul(self, rhs: F8) -> F8 {
        let mut r: u8 = 0;
        for i in 0..3 {
            if rhs.0 >> i & 1 == 1 {
                r ^= self.0 << i;
            }
        }
        for d in [4u8, 3] {
            if r >> d & 1 == 1 {
                r ^= 0b1011 << (d - 3);
            }
        }
        F8(r)
    }
}

impl fmt::Debug for F8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F8({:03b})", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relation() {
        let e = F8::ETA;
        assert_eq!(e * (e * e), e + F8::ONE);
    }

    #[test]
    fn eta_has_order_seven() {
        let e = F8::ETA;
        let mut p = F8::ONE;
        for k in 1..=7 {
            p = p * e;
            assert_eq!(p == F8::ONE, k == 7);
        }
    }

    #[test]
    fn inverses() {
        let a = F8::ONE + F8::ETA;
        assert_eq!(a.inv().unwrap() * a, F8::ONE);
        assert!(F8::ZERO.inv().is_err());
        for x in F8::nonzero() {
            assert_eq!(x * x.inv().unwrap(), F8::ONE);
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for a in F8::all() {
            for b in F8::all() {
                assert_eq!(a * b, b * a);
                for c in F8::all() {
                    assert_eq!((a * b) * c, a * (b * c));
                    assert_eq!(a * (b + c), a * b + a * c);
                }
            }
        }
    }
}
