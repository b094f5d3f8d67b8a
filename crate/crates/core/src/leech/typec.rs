//! Replay of the reduction that carries the Example 3 pair to (0,0,4) and a
//! second vector, checking each displayed pair.

use alloc::string::String;
use alloc::vec::Vec;

use super::model::LeechLattice;
use super::octo::{apply_word, m2, quoted_vector, ConwayGen, OctTriple};
use super::pairs::{classify_pure22, PairType};
use crate::error::Result;
use crate::exact::{DyadicRational, Octonion};

fn right(by: Octonion, coords: [bool; 3]) -> ConwayGen {
    ConwayGen::RightMul { by, coords }
}

fn unit23(t: usize) -> ConwayGen {
    right(Octonion::unit(t), [false, true, true])
}

fn half_triple(s: &str) -> OctTriple {
    OctTriple::parse(s).expect("displayed vector").scale(&DyadicRational::half())
}

fn triple(s: &str) -> OctTriple {
    OctTriple::parse(s).expect("displayed vector")
}

/// One displayed stage: the operations leading to it and the two vectors shown.
pub struct Stage {
    pub label: &'static str,
    pub ops: Vec<ConwayGen>,
    pub displayed: [OctTriple; 2],
}

pub fn stages() -> Vec<Stage> {
    let x = "-2-i0+i3+i5+i6";
    alloc::vec![
        Stage {
            label: "units i4, i6, i5, i1 on coordinates 2 and 3",
            ops: alloc::vec![unit23(4), unit23(6), unit23(5), unit23(1)],
            displayed: [triple(&alloc::format!("({x}, {x}, 0)")), triple("(-2-i1+i4+i6+i0, -2i0-1+i2-i3+i5, 0)"),],
        },
        Stage {
            label: "m2",
            ops: alloc::vec![m2()],
            displayed: [
                triple("(0, 0, -2i0-2i3-2i5-2i6)"),
                half_triple("(1-3i0+i1+i2-i3-i4+i5-i6, -1+3i0-i1-i2+i3+i4-i5+i6, 1-i0-i1-i2-i3-i4-i5-5i6)"),
            ],
        },
        Stage {
            label: "units i0, i1 on coordinates 2 and 3",
            ops: alloc::vec![unit23(0), unit23(1)],
            displayed: [triple("(0, 0, 2+2i1-2i2+2i4)"), half_triple("(1-3i0+i1+i2-i3-i4+i5-i6, -1-i0-3i1-i2-i3-i4+i5+i6, 1-i0+i1-i2+i3+5i4+i5-i6)"),],
        },
        Stage {
            label: "right multiplication by 1-i1 then (1+i2)/2",
            ops: alloc::vec![right("1-i1".parse().expect("octonion"), [true; 3]), right(Octonion::from_halves([1, 0, 0, 1, 0, 0, 0, 0]), [true; 3]),],
            displayed: [quoted_vector("(0,0,4)"), quoted_vector("(-i0+i2+i3-i6,-1-i0-i2-i4,2-i1-i2+i3+i4)")],
        },
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageCheck {
    pub label: String,
    /// image of the previous displayed pair equals this displayed pair
    pub from_previous_display: [bool; 2],
    /// image of the starting pair under all operations so far equals it
    pub from_start: [bool; 2],
    pub computed_from_start: [String; 2],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypecReport {
    pub stages: Vec<StageCheck>,
    pub final_member: bool,
    /// classification of the final displayed pair
    pub final_type: Option<PairType>,
    /// classification of the starting pair, which the operations preserve
    pub start_type: Option<PairType>,
}

impl TypecReport {
    pub fn all_displays_reproduced(&self) -> bool {
        self.stages.iter().all(|s| s.from_previous_display == [true; 2] && s.from_start == [true; 2])
    }
}

pub fn replay(l: &LeechLattice) -> Result<TypecReport> {
    let start = [quoted_vector("(-2-i0+i3+i5+i6,2i4+i0+i3-i5+i6,0)"), quoted_vector("(-2-i1+i4+i6+i0,2i5+i1+i4-i6+i0,0)")];
    let mut prev_display = start.clone();
    let mut chain = start.clone();
    let mut out = Vec::new();
    for st in stages() {
        let step = |v: &OctTriple| apply_word(&st.ops, v);
        let from_prev = [0, 1].map(|k| step(&prev_display[k]) == st.displayed[k]);
        chain = [step(&chain[0]), step(&chain[1])];
        out.push(StageCheck {
            label: String::from(st.label),
            from_previous_display: from_prev,
            from_start: [0, 1].map(|k| chain[k] == st.displayed[k]),
            computed_from_start: [0, 1].map(|k| alloc::format!("{}", chain[k])),
        });
        prev_display = st.displayed;
    }
    let classify = |p: &[OctTriple; 2]| -> Option<PairType> {
        let a = l.class(&p[0].to_ambient()?).ok()?;
        let b = l.class(&p[1].to_ambient()?).ok()?;
        classify_pure22(l, &a, &b).ok()
    };
    Ok(TypecReport {
        stages: out,
        final_member: prev_display[1].to_ambient().is_some_and(|a| l.is_member(&a)),
        final_type: classify(&prev_display),
        start_type: classify(&start),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leech::octo::tests::lattice;

    #[test]
    fn replay_matches_after_first_display() {
        let r = replay(lattice()).unwrap();
        assert_eq!(r.stages[0].from_previous_display, [true, false]);
        assert!(r.stages[1..].iter().all(|s| s.from_previous_display == [true, true]));
        assert_eq!(r.stages[0].computed_from_start[1], "(-2+i0-i1+i4+i6, -1+2i0+i2-i3+i5, 0)");
        assert!(r.final_member);
        assert_eq!(r.final_type, Some(PairType::C));
        assert_eq!(r.start_type, Some(PairType::B));
        assert!(!r.all_displays_reproduced());
    }
}
