//! PG(2,8) with GL3(2) acting through F2-matrices inside GL3(8).

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::exact::F8;
use crate::perm::finite::{center, PermGroupElems};
use crate::perm::group::point_stabilizer;
use crate::perm::{PermGroup, Permutation};

pub type Point = [F8; 3];

/// Scale so the first nonzero coordinate is 1.
pub fn normalize(v: Point) -> Option<Point> {
    let lead = v.iter().find(|x| !x.is_zero())?;
    let inv = lead.inv().ok()?;
    Some(v.map(|x| x * inv))
}

pub fn points() -> Vec<Point> {
    let mut out = Vec::new();
    for a in F8::all() {
        for b in F8::all() {
            for c in F8::all() {
                let v = [a, b, c];
                if normalize(v) == Some(v) {
                    out.push(v);
                }
            }
        }
    }
    out
}

/// Row vector times a 0/1 matrix given as three row masks.
pub fn act(v: &Point, m: &[u8; 3]) -> Point {
    let mut out = [F8::ZERO; 3];
    for (i, row) in m.iter().enumerate() {
        for (j, o) in out.iter_mut().enumerate() {
            if row >> j & 1 == 1 {
                *o = *o + v[i];
            }
        }
    }
    out
}

/// All invertible 3x3 matrices over F2.
pub fn gl32() -> Vec<[u8; 3]> {
    let mut out = Vec::new();
    for a in 1..8u8 {
        for b in 1..8u8 {
            for c in 1..8u8 {
                if a != b && c != a && c != b && c != a ^ b {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Stabilizer type decided by order, element-order counts and centre.
pub fn small_group_type(g: &PermGroup) -> String {
    let ge = PermGroupElems::new(g.clone());
    let els = ge.bsgs().elements();
    let mut orders: BTreeMap<u64, usize> = BTreeMap::new();
    for e in &els {
        *orders.entry(e.order()).or_default() += 1;
    }
    let set = els.iter().cloned().collect();
    let z = center(&ge, &set).len();
    let counts: Vec<(u64, usize)> = orders.into_iter().collect();
    match (els.len(), counts.as_slice(), z) {
        (24, [(1, 1), (2, 9), (3, 8), (4, 6)], 1) => String::from("S4"),
        (7, [(1, 1), (7, 6)], _) => String::from("C7"),
        (4, [(1, 1), (2, 3)], _) => String::from("2^2"),
        (n, c, z) => alloc::format!("unidentified(order {n}, orders {c:?}, centre {z})"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PgOrbit {
    pub size: usize,
    pub stabilizer_order: u64,
    pub stabilizer_type: String,
}

#[derive(Clone, Debug)]
pub struct PgOrbits {
    pub n_points: usize,
    pub group_order: u64,
    pub orbits: Vec<PgOrbit>,
    /// orbit sizes of (1,0,0), (1,eta,0), (1,eta,eta^2)
    pub representative_sizes: [usize; 3],
}

pub fn pg28_orbits() -> PgOrbits {
    let pts = points();
    let index: BTreeMap<Point, usize> = pts.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let gens: Vec<Permutation> =
        gl32().iter().map(|m| Permutation::from_fn(pts.len(), |i| index[&normalize(act(&pts[i], m)).unwrap()]).unwrap()).collect();
    let g = PermGroup::new(pts.len(), gens);
    let part = g.orbit_partition();
    let mut seen = BTreeMap::new();
    for (i, _) in pts.iter().enumerate() {
        seen.entry(part.orbit_of[i]).or_insert(i);
    }
    let mut orbits: Vec<PgOrbit> = seen
        .values()
        .map(|&i| {
            let stab = point_stabilizer(&g, i);
            PgOrbit { size: part.sizes[part.orbit_of[i] as usize], stabilizer_order: stab.order(), stabilizer_type: small_group_type(&stab) }
        })
        .collect();
    orbits.sort_by_key(|o| o.size);
    let eta = F8::ETA;
    let reps = [[F8::ONE, F8::ZERO, F8::ZERO], [F8::ONE, eta, F8::ZERO], [F8::ONE, eta, eta * eta]];
    let representative_sizes = reps.map(|p| part.sizes[part.orbit_of[index[&p]] as usize]);
    PgOrbits { n_points: pts.len(), group_order: g.order(), orbits, representative_sizes }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(points().len(), 73);
        assert_eq!(gl32().len(), 168);
    }

    #[test]
    fn orbits_and_stabilizers() {
        let o = pg28_orbits();
        assert_eq!(o.group_order, 168);
        let sizes: Vec<usize> = o.orbits.iter().map(|x| x.size).collect();
        assert_eq!(sizes, [7, 24, 42]);
        let st: Vec<(u64, &str)> = o.orbits.iter().map(|x| (x.stabilizer_order, x.stabilizer_type.as_str())).collect();
        assert_eq!(st, [(24, "S4"), (7, "C7"), (4, "2^2")]);
        assert_eq!(o.representative_sizes, [7, 42, 24]);
    }
}
