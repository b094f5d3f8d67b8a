//! Polynomials over F2 packed into a `u64` (bit i = coefficient of x^i).

pub fn degree(p: u64) -> Option<u32> {
    if p == 0 {
        None
    } else {
        Some(63 - p.leading_zeros())
    }
}

pub fn mul(a: u64, b: u64) -> u64 {
    let mut r = 0u64;
    for i in 0..64 {
        if b >> i & 1 == 1 {
            r ^= a << i;
        }
    }
    r
}

/// Quotient and remainder.
pub fn divrem(mut a: u64, b: u64) -> (u64, u64) {
    let db = degree(b).expect("division by the zero polynomial");
    let mut q = 0u64;
    while let Some(da) = degree(a) {
        if da < db {
            break;
        }
        q |= 1 << (da - db);
        a ^= b << (da - db);
    }
    (q, a)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = divrem(a, b).1;
        a = b;
        b = r;
    }
    a
}

/// Coefficients reversed: x^deg p(1/x).
pub fn reciprocal(p: u64) -> u64 {
    let d = degree(p).unwrap_or(0);
    (0..=d).filter(|&i| p >> i & 1 == 1).fold(0, |acc, i| acc | 1 << (d - i))
}

pub const X7_PLUS_1: u64 = 0b1000_0001;
pub const X_PLUS_1: u64 = 0b11;
/// x^3 + x + 1
pub const CUBIC_A: u64 = 0b1011;
/// x^3 + x^2 + 1
pub const CUBIC_B: u64 = 0b1101;

/// The irreducible factors of x^7 + 1 over F2.
pub fn factor_x7_plus_1() -> [u64; 3] {
    [X_PLUS_1, CUBIC_A, CUBIC_B]
}

/// Evaluates `p` at an element of F8.
pub fn eval_f8(p: u64, x: super::F8) -> super::F8 {
    let mut acc = super::F8::ZERO;
    let mut pw = super::F8::ONE;
    for i in 0..64 {
        if p >> i & 1 == 1 {
            acc = acc + pw;
        }
        pw = pw * x;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::F8;

    #[test]
    fn factors_multiply_out() {
        let [a, b, c] = factor_x7_plus_1();
        assert_eq!(mul(mul(a, b), c), X7_PLUS_1);
    }

    #[test]
    fn cubic_vanishes_at_eta() {
        assert_eq!(eval_f8(CUBIC_A, F8::ETA), F8::ZERO);
        assert_ne!(eval_f8(CUBIC_B, F8::ETA), F8::ZERO);
    }

    #[test]
    fn factors_coprime() {
        let f = factor_x7_plus_1();
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert_eq!(gcd(f[i], f[j]), 1);
                }
            }
        }
    }

    #[test]
    fn irreducible_cubics() {
        for p in [CUBIC_A, CUBIC_B] {
            for d in [0b10u64, 0b11] {
                assert_ne!(divrem(p, d).1, 0);
            }
        }
        assert_eq!(reciprocal(CUBIC_A), CUBIC_B);
    }
}
