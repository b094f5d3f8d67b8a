//! One verification per proof step, each producing a certificate.

pub mod certificate;
pub mod facts;
mod lemmas;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

pub use certificate::{Builder, Certificate, Check, Verdict, Witness};
pub use facts::{parse_registry, registry, Fact};
pub use lemmas::{held_orbit_check, load_a7xl3, load_golay, load_m24, HeldCheck};

use crate::constants::Constants;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StepId {
    InCo1,
    SevenA,
    NotM24,
    Examples,
    Typec,
    PairTypes,
    Case2,
    Not22c1,
    NotInN23,
    Not22a,
}

impl StepId {
    pub const ALL: [StepId; 10] = [
        StepId::InCo1,
        StepId::SevenA,
        StepId::NotM24,
        StepId::Examples,
        StepId::Typec,
        StepId::PairTypes,
        StepId::Case2,
        StepId::Not22c1,
        StepId::NotInN23,
        StepId::Not22a,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            StepId::InCo1 => "inCo1",
            StepId::SevenA => "7A",
            StepId::NotM24 => "notM24",
            StepId::Examples => "examples",
            StepId::Typec => "typec",
            StepId::PairTypes => "pair_types",
            StepId::Case2 => "case2",
            StepId::Not22c1 => "not22c1",
            StepId::NotInN23 => "notinN23",
            StepId::Not22a => "not22a",
        }
    }

    /// The part of the proof the step supports.
    pub fn claim(self) -> &'static str {
        match self {
            StepId::InCo1 => "the 2^3 lies in 2^11:M24 in one of three orbits of crosses",
            StepId::SevenA => "the element of order 7 is not fixed-point-free, so not 7A",
            StepId::NotM24 => "the 2^3:7 in 2^11:M24 does not extend to the Borel subgroup",
            StepId::Examples => "each orbit of crosses is realized by an explicit 2^3",
            StepId::Typec => "the third orbit gives pure 2^2s of type (c)",
            StepId::PairTypes => "pure 2^2 types (a), (b), (c) are told apart",
            StepId::Case2 => "the normalizer of the 7 cannot be A7 x L3(2) or contain SL(2,3) there",
            StepId::Not22c1 => "the 7 cannot centralize M12:2 with the 2^3 in 2B-fusing classes",
            StepId::NotInN23 => "the Borel subgroup cannot lie in the 2^3 normalizer",
            StepId::Not22a => "the remaining D14 extensions do not give Sz(8)",
        }
    }

    /// Bundled constants the step reads.
    pub fn constants_used(self) -> &'static [&'static str] {
        match self {
            StepId::NotM24 | StepId::Not22c1 => &["golay", "m24"],
            StepId::PairTypes => &["golay"],
            StepId::Case2 => &["a7xl3"],
            _ => &[],
        }
    }
}

impl fmt::Display for StepId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownStep(pub String);

impl fmt::Display for UnknownStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown step id {:?}", self.0)
    }
}

impl core::error::Error for UnknownStep {}

impl FromStr for StepId {
    type Err = UnknownStep;
    fn from_str(s: &str) -> Result<Self, UnknownStep> {
        StepId::ALL.into_iter().find(|id| id.as_str().eq_ignore_ascii_case(s)).ok_or_else(|| UnknownStep(s.into()))
    }
}

/// The external dataset for `not22a`: the bytes of a permutation file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dataset {
    pub name: String,
    pub bytes: Vec<u8>,
}

#[derive(Clone, Debug, Default)]
pub struct Inputs {
    pub constants: Constants,
    pub held: Option<Dataset>,
}

pub fn run_step(id: StepId, inputs: &Inputs) -> Certificate {
    let mut cert = match id {
        StepId::InCo1 => lemmas::in_co1(),
        StepId::SevenA => lemmas::seven_a(),
        StepId::NotM24 => lemmas::not_m24(&inputs.constants),
        StepId::Examples => lemmas::examples(),
        StepId::Typec => lemmas::typec(),
        StepId::PairTypes => lemmas::pair_types(&inputs.constants),
        StepId::Case2 => lemmas::case2(&inputs.constants),
        StepId::Not22c1 => lemmas::not22c1(&inputs.constants),
        StepId::NotInN23 => lemmas::not_in_n23(),
        StepId::Not22a => lemmas::not22a(inputs.held.as_ref()),
    };
    let mut hashed: Vec<(String, String)> =
        id.constants_used().iter().map(|&n| (String::from(n), inputs.constants.hash_of(n).expect("known constant"))).collect();
    hashed.append(&mut cert.inputs);
    cert.inputs = hashed;
    cert
}

/// The aggregated result of a run.
#[derive(Clone, Debug)]
pub struct Report {
    pub certificates: Vec<Certificate>,
}

impl Report {
    pub fn count(&self, v: Verdict) -> usize {
        self.certificates.iter().filter(|c| c.verdict == v).count()
    }

    pub fn any_failed(&self) -> bool {
        self.count(Verdict::Failed) > 0
    }

    /// Every fact id consumed, in registry order.
    pub fn cited_facts(&self) -> Vec<&'static str> {
        let mut out: Vec<&'static str> = Vec::new();
        for c in &self.certificates {
            for f in &c.cited {
                if !out.contains(f) {
                    out.push(f);
                }
            }
        }
        let reg = registry();
        out.sort_by_key(|f| reg.iter().position(|r| r.id == *f));
        out
    }
}

pub fn verify_all(inputs: &Inputs) -> Report {
    verify(&StepId::ALL, inputs)
}

pub fn verify(ids: &[StepId], inputs: &Inputs) -> Report {
    Report { certificates: ids.iter().map(|&id| run_step(id, inputs)).collect() }
}
