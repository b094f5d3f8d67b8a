use alloc::vec::Vec;
use core::fmt;

/// Permutation of `0..degree`, acting on the right: `p.image(i)` is `i^p`
/// and `a.mul(b)` applies `a` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    img: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { img: (0..n as u32).collect() }
    }

    /// Fails unless `img` is a bijection of `0..img.len()`.
    pub fn from_images(img: Vec<u32>) -> Option<Self> {
        let n = img.len();
        let mut seen = alloc::vec![false; n];
        for &x in &img {
            let x = x as usize;
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Permutation { img })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> usize) -> Option<Self> {
        Self::from_images((0..n).map(|i| f(i) as u32).collect())
    }

    /// Builds from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Option<Self> {
        let mut img: Vec<u32> = (0..n as u32).collect();
        for c in cycles {
            for k in 0..c.len() {
                img[c[k]] = c[(k + 1) % c.len()] as u32;
            }
        }
        Self::from_images(img)
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.img[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.img
    }

    pub fn mul(&self, other: &Permutation) -> Permutation {
        Permutation { img: self.img.iter().map(|&x| other.img[x as usize]).collect() }
    }

    pub fn inv(&self) -> Permutation {
        let mut img = alloc::vec![0u32; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            img[x as usize] = i as u32;
        }
        Permutation { img }
    }

    pub fn pow(&self, k: i64) -> Permutation {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut k = k.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut b = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            k >>= 1;
        }
        acc
    }

    /// `g^-1 self g`.
    pub fn conj(&self, g: &Permutation) -> Permutation {
        g.inv().mul(self).mul(g)
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Sorted cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let mut len = 0;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = self.image(j);
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable();
        out
    }

    pub fn order(&self) -> u64 {
        self.cycle_type().into_iter().fold(1u64, |acc, l| num_integer::lcm(acc, l as u64))
    }

    /// Smallest point moved.
    pub fn first_moved(&self) -> Option<usize> {
        self.img.iter().enumerate().find(|(i, &x)| *i as u32 != x).map(|(i, _)| i)
    }

    /// Image of a set given as a bitmask (degree <= 64).
    pub fn image_mask(&self, mask: u64) -> u64 {
        let mut out = 0u64;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            out |= 1u64 << self.img[i];
            m &= m - 1;
        }
        out
    }

    /// Direct sum acting on `0..a.degree()` and the shifted second block.
    pub fn direct_sum(a: &Permutation, b: &Permutation) -> Permutation {
        let n = a.degree() as u32;
        let img = a.img.iter().copied().chain(b.img.iter().map(|&x| x + n)).collect();
        Permutation { img }
    }

    /// Extends by fixed points up to degree `n`.
    pub fn padded(&self, n: usize) -> Permutation {
        let mut img = self.img.clone();
        img.extend(self.img.len() as u32..n as u32);
        Permutation { img }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut any = false;
        for i in 0..n {
            if seen[i] || self.image(i) == i {
                continue;
            }
            any = true;
            f.write_str("(")?;
            let mut j = i;
            let mut first = true;
            while !seen[j] {
                seen[j] = true;
                if !first {
                    f.write_str(",")?;
                }
                write!(f, "{}", j)?;
                first = false;
                j = self.image(j);
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::from_images(v).unwrap())
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(alloc::vec![1, 1, 0]).is_none());
        assert!(Permutation::from_images(alloc::vec![0, 3, 1]).is_none());
    }

    #[test]
    fn cycles_and_order() {
        let p = Permutation::from_cycles(6, &[&[0, 1, 2], &[3, 4]]).unwrap();
        assert_eq!(p.cycle_type(), alloc::vec![1, 2, 3]);
        assert_eq!(p.order(), 6);
        assert!(p.pow(6).is_identity());
        assert_eq!(alloc::format!("{:?}", p), "(0,1,2)(3,4)");
    }

    proptest! {
        #[test]
        fn inverse_round_trip(p in perm(9)) {
            prop_assert!(p.mul(&p.inv()).is_identity());
            prop_assert_eq!(p.inv().inv(), p);
        }

        #[test]
        fn associative(a in perm(7), b in perm(7), c in perm(7)) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn action_is_right(a in perm(7), b in perm(7)) {
            for i in 0..7 {
                prop_assert_eq!(a.mul(&b).image(i), b.image(a.image(i)));
            }
        }
    }
}
