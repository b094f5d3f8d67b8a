use alloc::format;
use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A rational number `numerator / 2^exponent` kept in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DyadicRational {
    num: BigInt,
    exp: u32,
}

impl DyadicRational {
    pub fn new(num: impl Into<BigInt>, exp: u32) -> Self {
        let mut d = DyadicRational { num: num.into(), exp };
        d.normalize();
        d
    }

    pub fn zero() -> Self {
        DyadicRational { num: BigInt::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        DyadicRational { num: BigInt::one(), exp: 0 }
    }

    pub fn from_int(n: i64) -> Self {
        DyadicRational { num: BigInt::from(n), exp: 0 }
    }

    pub fn half() -> Self {
        DyadicRational { num: BigInt::one(), exp: 1 }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.exp = 0;
            return;
        }
        while self.exp > 0 && self.num.is_even() {
            self.num >>= 1u32;
            self.exp -= 1;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.exp == 0
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    /// Multiplies by `2^k` (k may be negative).
    pub fn shl(&self, k: i32) -> Self {
        if k >= 0 {
            let k = k as u32;
            if k <= self.exp {
                DyadicRational::new(self.num.clone(), self.exp - k)
            } else {
                DyadicRational::new(&self.num << (k - self.exp), 0)
            }
        } else {
            DyadicRational::new(self.num.clone(), self.exp + (-k) as u32)
        }
    }

    /// Exact division; fails unless the divisor is `odd * 2^k` with the odd
    /// part dividing the numerator.
    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero("DyadicRational"));
        }
        let mut d = other.num.clone();
        let mut k = 0i64;
        while d.is_even() {
            d >>= 1u32;
            k += 1;
        }
        let (q, r) = self.num.div_rem(&d);
        if !r.is_zero() {
            return Err(Error::NotDyadic(format!("{} / {}", self, other)));
        }
        let shift = other.exp as i64 - k;
        Ok(DyadicRational::new(q, self.exp).shl(shift as i32))
    }

    /// Value times `2^k` as an integer, if integral.
    pub fn scaled_int(&self, k: u32) -> Option<i64> {
        if k < self.exp {
            return None;
        }
        (&self.num << (k - self.exp)).to_i64()
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.exp == 0 {
            self.num.to_i64()
        } else {
            None
        }
    }

    fn aligned(&self, other: &Self) -> (BigInt, BigInt, u32) {
        let e = self.exp.max(other.exp);
        (&self.num << (e - self.exp), &other.num << (e - other.exp), e)
    }
}

impl Default for DyadicRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for DyadicRational {
    fn from(n: i64) -> Self {
        DyadicRational::from_int(n)
    }
}

impl Add for &DyadicRational {
    type Output = DyadicRational;
    fn add(self, rhs: &DyadicRational) -> DyadicRational {
        let (a, b, e) = self.aligned(rhs);
        DyadicRational::new(a + b, e)
    }
}

impl Sub for &DyadicRational {
    type Output = DyadicRational;
    fn sub(self, rhs: &DyadicRational) -> DyadicRational {
        let (a, b, e) = self.aligned(rhs);
        DyadicRational::new(a - b, e)
    }
}

impl Mul for &DyadicRational {
    type Output = DyadicRational;
    fn mul(self, rhs: &DyadicRational) -> DyadicRational {
        DyadicRational::new(&self.num * &rhs.num, self.exp + rhs.exp)
    }
}

impl Neg for &DyadicRational {
    type Output = DyadicRational;
    fn neg(self) -> DyadicRational {
        DyadicRational { num: -&self.num, exp: self.exp }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for DyadicRational {
            type Output = DyadicRational;
            fn $m(self, rhs: DyadicRational) -> DyadicRational {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for DyadicRational {
    type Output = DyadicRational;
    fn neg(self) -> DyadicRational {
        -&self
    }
}

impl Ord for DyadicRational {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl PartialOrd for DyadicRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Textual form `num/2^e`, or plain `num` when integral.
impl fmt::Display for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}

impl fmt::Debug for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for DyadicRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::NotDyadic(s.to_string());
        let s = s.trim();
        let (n, e) = match s.split_once('/') {
            None => (s, 0u32),
            Some((n, d)) => {
                let e = d.strip_prefix("2^").ok_or_else(bad)?;
                (n, e.parse::<u32>().map_err(|_| bad())?)
            }
        };
        let num = BigInt::from_str(n).map_err(|_| bad())?;
        Ok(DyadicRational::new(num, e))
    }
}

pub(crate) fn fmt_list(xs: &[DyadicRational]) -> String {
    let parts: alloc::vec::Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    parts.join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dy() -> impl Strategy<Value = DyadicRational> {
        (-10_000i64..10_000, 0u32..8).prop_map(|(n, e)| DyadicRational::new(n, e))
    }

    #[test]
    fn canonical_form() {
        let d = DyadicRational::new(12, 3);
        assert_eq!(d.numerator(), &BigInt::from(3));
        assert_eq!(d.exponent(), 1);
        assert_eq!(DyadicRational::new(0, 5).exponent(), 0);
    }

    #[test]
    fn half_plus_half() {
        let h = DyadicRational::half();
        assert_eq!(&h + &h, DyadicRational::one());
        assert_eq!((&h * &h).to_string(), "1/2^2");
    }

    #[test]
    fn division() {
        let a = DyadicRational::from_int(9);
        let b = DyadicRational::new(3, 2);
        assert_eq!(a.checked_div(&b).unwrap(), DyadicRational::from_int(12));
        assert!(a.checked_div(&DyadicRational::from_int(2)).is_ok());
        assert!(DyadicRational::one().checked_div(&DyadicRational::from_int(3)).is_err());
        assert!(a.checked_div(&DyadicRational::zero()).is_err());
    }

    proptest! {
        #[test]
        fn text_round_trip(a in dy()) {
            let s = a.to_string();
            prop_assert_eq!(s.parse::<DyadicRational>().unwrap(), a);
        }

        #[test]
        fn ring_laws(a in dy(), b in dy(), c in dy()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn order_matches_subtraction(a in dy(), b in dy()) {
            prop_assert_eq!(a < b, (&a - &b).is_negative());
        }
    }
}
