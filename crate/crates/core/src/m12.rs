//! M12:2 as the stabilizer in M24 of a dodecad and its complement, with the
//! involution-class audit used by the pure 2^3 check.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::golay::GolayCode;
use crate::perm::group::object_stabilizer;
use crate::perm::search::pure_2cubed_check;
use crate::perm::{PermGroup, PermGroupElems, Permutation};

pub const M12_2_ORDER: u64 = 190_080;

pub fn m12_2(code: &GolayCode, m24: &PermGroup) -> Result<(PermGroup, u32)> {
    let d = *code.dodecads().iter().min().ok_or_else(|| Error::Calibration(String::from("code has no dodecads")))?;
    let full = (1u64 << 24) - 1;
    let pair = |m: u64| if m < full ^ m { (m, full ^ m) } else { (full ^ m, m) };
    let (g, _) = object_stabilizer(m24, pair(d as u64), |p, g| pair(g.image_mask(p.0)));
    if g.order() != M12_2_ORDER {
        return Err(Error::WrongOrder { expected: M12_2_ORDER, got: g.order() });
    }
    Ok((g, d))
}

/// Invariant used to name involution classes: the cycle type on the 24
/// points and whether the two dodecads are swapped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct InvolutionSignature {
    pub fixed_points: usize,
    pub swaps_dodecads: bool,
}

impl InvolutionSignature {
    pub fn cycle_type(&self) -> String {
        alloc::format!("1^{} 2^{}", self.fixed_points, (24 - self.fixed_points) / 2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassAuditRow {
    pub name: &'static str,
    pub signature: InvolutionSignature,
    /// elements with this signature
    pub count: usize,
    /// size of the conjugacy class of one of them
    pub class_size: usize,
}

#[derive(Clone, Debug)]
pub struct PureCheck {
    pub order: u64,
    pub audit: Vec<ClassAuditRow>,
    /// true when the signatures determine the classes
    pub unambiguous: bool,
    /// true when cycle type alone would merge two classes
    pub cycle_type_merges: bool,
    pub allowed: Vec<&'static str>,
    pub pure_allowed: usize,
    pub pure_any: usize,
}

/// Names by signature: 2A and 2B lie in M12 with 0 and 8 fixed points;
/// 2C swaps the dodecads.
fn class_name(s: &InvolutionSignature) -> Option<&'static str> {
    match (s.fixed_points, s.swaps_dodecads) {
        (0, false) => Some("2A"),
        (8, false) => Some("2B"),
        (0, true) => Some("2C"),
        _ => None,
    }
}

pub fn pure_check(code: &GolayCode, m24: &PermGroup, allowed: &[&'static str]) -> Result<PureCheck> {
    let (g, d) = m12_2(code, m24)?;
    let order = g.order();
    let sig = |p: &Permutation| InvolutionSignature {
        fixed_points: (0..24).filter(|&i| p.image(i) == i).count(),
        swaps_dodecads: p.image_mask(d as u64) != d as u64,
    };
    let involutions: Vec<Permutation> = g.bsgs().elements().into_iter().filter(|p| p.order() == 2).collect();
    let mut by_sig: BTreeMap<InvolutionSignature, Vec<&Permutation>> = BTreeMap::new();
    for p in &involutions {
        by_sig.entry(sig(p)).or_default().push(p);
    }
    let mut audit = Vec::new();
    let mut unambiguous = true;
    for (s, els) in &by_sig {
        let (_, class_size) = object_stabilizer(&g, els[0].clone(), |a, h| a.conj(h));
        let name = class_name(s);
        unambiguous &= name.is_some() && class_size == els.len();
        audit.push(ClassAuditRow { name: name.unwrap_or("?"), signature: *s, count: els.len(), class_size });
    }
    unambiguous &= audit.len() == 3;
    let mut cts: Vec<usize> = audit.iter().map(|r| r.signature.fixed_points).collect();
    cts.sort_unstable();
    cts.dedup();
    let cycle_type_merges = cts.len() < audit.len();
    let ge = PermGroupElems::new(g);
    let pure_allowed = pure_2cubed_check(&ge, &involutions, |p| class_name(&sig(p)).is_some_and(|n| allowed.contains(&n))).len();
    let pure_any = pure_2cubed_check(&ge, &involutions, |_| true).len();
    Ok(PureCheck { order, audit, unambiguous, cycle_type_merges, allowed: allowed.to_vec(), pure_allowed, pure_any })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{GOLAY_TXT, M24_PERM};
    use crate::golay::m24_group;

    #[test]
    fn no_pure_2cubed_in_2b_fusing_classes() {
        let code = GolayCode::parse(GOLAY_TXT).unwrap();
        let m24 = m24_group(M24_PERM, &code).unwrap();
        let r = pure_check(&code, &m24, &["2A", "2C"]).unwrap();
        assert_eq!(r.order, M12_2_ORDER);
        let rows: Vec<(&str, usize)> = r.audit.iter().map(|a| (a.name, a.class_size)).collect();
        assert_eq!(rows, [("2A", 396), ("2C", 792), ("2B", 495)]);
        assert!(r.unambiguous);
        assert!(r.cycle_type_merges);
        assert_eq!(r.pure_allowed, 0);
        assert!(r.pure_any > 0);
    }
}
