//! Prints one PASS/FAIL line per acceptance criterion and always exits 0.
//! Set SZ8_DATA_DIR to a directory holding not22a.perm to run criterion 11
//! against the dataset.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use sz8_verify::{load_inputs, run_parallel};
use sz8_verify_core::constants::Constants;
use sz8_verify_core::perm::PermGroupElems;
use sz8_verify_core::projective::pg28_orbits;
use sz8_verify_core::steps::{run_step, Certificate, Inputs, Report, StepId, Verdict};
use sz8_verify_core::suzuki::{amalgam_generation, borel_module_check, build_sz8, suzuki_2group_check};

struct Run {
    report: Report,
    times: Vec<Duration>,
}

impl Run {
    fn cert(&self, id: StepId) -> &Certificate {
        self.report.certificates.iter().find(|c| c.step == id).expect("step ran")
    }

    fn time(&self, ids: &[StepId]) -> Duration {
        self.report.certificates.iter().zip(&self.times).filter(|(c, _)| ids.contains(&c.step)).map(|(_, t)| *t).sum()
    }
}

/// Collects failures for one criterion.
#[derive(Default)]
struct Crit {
    failures: Vec<String>,
}

impl Crit {
    fn require(&mut self, what: impl Into<String>, ok: bool) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    /// Every named check must be present and passing.
    fn checks(&mut self, c: &Certificate, names: &[&str]) {
        for n in names {
            match c.check(n) {
                Some(true) => {}
                Some(false) => self.failures.push(format!("{}: {n}", c.step)),
                None => self.failures.push(format!("{}: missing check {n:?}", c.step)),
            }
        }
        for f in c.checks.iter().filter(|f| !f.passed && f.name.ends_with(" completed")) {
            self.failures.push(format!("{}: {}", c.step, f.name));
        }
    }

    fn budget(&mut self, t: Duration, limit: Duration) {
        self.require(format!("runtime {:.2}s exceeds {}s", t.as_secs_f64(), limit.as_secs()), t < limit);
    }

    fn print(self, n: usize, title: &str, t: Duration) {
        if self.failures.is_empty() {
            println!("PASS {n:>2} {title} ({:.2}s)", t.as_secs_f64());
        } else {
            println!("FAIL {n:>2} {title} ({:.2}s): {}", t.as_secs_f64(), self.failures.join("; "));
        }
    }
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn criterion1(run: &Run) {
    let mut c = Crit::default();
    let t = Instant::now();
    let o = pg28_orbits();
    let t = t.elapsed();
    let sizes: Vec<usize> = o.orbits.iter().map(|x| x.size).collect();
    let stabs: Vec<(u64, &str)> = o.orbits.iter().map(|x| (x.stabilizer_order, x.stabilizer_type.as_str())).collect();
    c.require("73 points", o.n_points == 73);
    c.require(format!("orbit sizes {sizes:?}"), sizes == [7, 24, 42]);
    c.require(format!("stabilizers {stabs:?}"), stabs == [(24, "S4"), (7, "C7"), (4, "2^2")]);
    c.checks(
        run.cert(StepId::InCo1),
        &["PG(2,8) has 73 points", "orbit sizes are 7, 24, 42", "point stabilizer orders are 24, 7, 4", "point stabilizers are S4, C7, 2^2"],
    );
    c.budget(t, secs(1));
    c.print(1, "PG(2,8) orbit computation", t);
}

fn criterion2(run: &Run) {
    let mut c = Crit::default();
    c.checks(
        run.cert(StepId::Examples),
        &["Gram/8 is even with determinant 1", "no nonzero vector of norm below 32", "all eleven quoted vectors are members of type 4"],
    );
    let t = run.time(&[StepId::Examples]);
    c.budget(t, secs(30));
    c.print(2, "Octonionic Leech model calibration", t);
}

fn criterion3(run: &Run) {
    let mut c = Crit::default();
    c.checks(run.cert(StepId::Examples), &["sigma7, permutations, sign changes, unit multiplications, g1, g1/2, m2 preserve the lattice"]);
    let t = run.time(&[StepId::Examples]);
    c.budget(t, secs(5));
    c.print(3, "Generator preservation", t);
}

fn criterion4(run: &Run) {
    let mut c = Crit::default();
    let cert = run.cert(StepId::Typec);
    let displays: Vec<&str> = cert.checks.iter().filter(|k| k.name.starts_with("display ")).map(|k| k.name.as_str()).collect();
    c.require("no display checks recorded", !displays.is_empty());
    c.checks(cert, &displays);
    c.checks(
        cert,
        &[
            "every display agrees with the chain applied to the Example 3 pair",
            "final vector is a lattice member",
            "final displayed pair classifies (c)",
            "the Example 3 pair itself classifies (c)",
        ],
    );
    let t = run.time(&[StepId::Typec]);
    c.budget(t, secs(10));
    c.print(4, "typec replay", t);
}

fn criterion5(run: &Run) {
    let mut c = Crit::default();
    c.checks(
        run.cert(StepId::PairTypes),
        &[
            "P_a, P_b, P_c pairwise distinct",
            "profiles equal the golden P_a, P_b, P_c",
            "(8,0^23) with (4^4,0^20), (2^8,4^2,0^14), (2^12,4,0^11) classify (a), (b), (c)",
            "(4,0,0) with the three quoted vectors classifies (a), (b), (c)",
        ],
    );
    let t = run.time(&[StepId::PairTypes]);
    c.budget(t, secs(60));
    c.print(5, "Pair-type separation", t);
}

fn criterion6(run: &Run) {
    let mut c = Crit::default();
    c.checks(
        run.cert(StepId::Examples),
        &[
            "Example 1: members of type 4, rank 3, sigma7-invariant",
            "Example 1 lies in the 7-orbit",
            "Example 1 with (4,0,0) and the centre is elementary abelian of rank 5",
            "Example 2 as printed: members of type 4",
            "Example 2 as printed: rank 3, fixed pointwise by sigma7",
            "Example 2 as printed lies in the 24-orbit",
            "Example 3: member of type 4, rank 3, sigma7-invariant",
            "Example 3 lies in the 42-orbit",
        ],
    );
    let t = run.time(&[StepId::Examples]);
    c.budget(t, secs(60));
    c.print(6, "Examples 1-3", t);
}

fn criterion7(run: &Run) {
    let mut c = Crit::default();
    c.checks(
        run.cert(StepId::NotM24),
        &[
            "Golay code / <Omega> is uniserial with factors 1, 4, 6 from the bottom",
            "even cocode rejected: its socle layers are not 1, 4, 6",
            "restricted to x the module is 1a+1a+3a+3a+3b",
            "Ext^1 pattern over 2^3:7 matches the gluing sentence under some reading",
            "2^6:2^3:7 has order 3584",
            "2^6:2^3:7 contains no 2^{3+3}:7",
        ],
    );
    let t = run.time(&[StepId::NotM24]);
    c.budget(t, secs(300));
    c.print(7, "notM24 chain", t);
}

fn criterion8(run: &Run) {
    let mut c = Crit::default();
    c.checks(
        run.cert(StepId::SevenA),
        &[
            "faithful 24-dim multiplicity vectors (a,b,c) with a+6b+7c=24, c>=1, are exactly six",
            "fixed dimensions of x on the rational irreducibles 1, 6, 7 are 1, 0, 1",
            "every faithful 24-dim representation has a nonzero x-fixed vector",
        ],
    );
    let t = run.time(&[StepId::SevenA]);
    c.budget(t, secs(1));
    c.print(8, "7A fixed-point argument", t);
}

fn criterion9() {
    let mut c = Crit::default();
    let t = Instant::now();
    match build_sz8() {
        Err(e) => c.require(format!("Sz(8) construction: {e}"), false),
        Ok(sz) => {
            c.require("order 29120", sz.bsgs.order() == 29_120);
            c.require("Borel order 448", sz.borel().order() == 448);
            let p = sz.sylow2();
            c.require("Sylow 2-subgroup is a Suzuki 2-group", suzuki_2group_check(&PermGroupElems::new(sz.group.clone()), &p).unwrap_or(false));
            match borel_module_check(&sz) {
                Ok(m) => c.require("Z(P) and P/Z(P) isomorphic as F2[C7]-modules", m.isomorphic),
                Err(e) => c.require(format!("Borel module check: {e}"), false),
            }
            let a = amalgam_generation(&sz);
            c.require("an inverting involution generates Sz(8) with 2^3:7", a.generating >= 1 && a.generated_order == 29_120);
        }
    }
    let t = t.elapsed();
    c.budget(t, secs(30));
    c.print(9, "Sz(8) structure", t);
}

fn criterion10(run: &Run) {
    let mut c = Crit::default();
    c.checks(
        run.cert(StepId::Case2),
        &[
            "SL(2,3) has Sylow 2-subgroup Q8 with one involution and no 2^2",
            "A7 x L3(2) has order 423360",
            "A7 x L3(2) contains no 2^3:7",
            "control: A7 x AGL(1,8) contains a 2^3:7",
        ],
    );
    c.checks(
        run.cert(StepId::Not22c1),
        &[
            "M12:2 (dodecad pair stabilizer in M24) has order 190080",
            "three involution classes, each identified by cycle type and dodecad swap",
            "no elementary 2^3 with all involutions in 2A or 2C",
        ],
    );
    let t = run.time(&[StepId::Case2, StepId::Not22c1]);
    c.budget(t, secs(300));
    c.print(10, "Case eliminations", t);
}

fn criterion11(run: &Run) {
    let mut c = Crit::default();
    let cert = run.cert(StepId::Not22a);
    let t = run.time(&[StepId::Not22a]);
    let others_ran = run.report.certificates.iter().filter(|c| c.step != StepId::Not22a).all(|c| c.verdict != Verdict::SkippedMissingData);
    c.require("other steps must run without the dataset", others_ran);
    if cert.verdict == Verdict::SkippedMissingData {
        c.require("skip must record the missing dataset", !cert.notes.is_empty());
        c.print(11, "Held orbit computation: dataset absent, skipped-missing-data as specified", t);
        return;
    }
    c.checks(
        cert,
        &[
            "dataset degree is 266560",
            "generated group has order 138240",
            "orbit sizes sum to 266560",
            "every orbit size divides the group order",
            "no regular orbit",
        ],
    );
    c.budget(t, secs(120));
    c.print(11, "Held orbit computation", t);
}

fn criterion12(run: &Run, inputs: &Inputs) {
    let mut c = Crit::default();
    let t = Instant::now();
    let again = run_parallel(&StepId::ALL, inputs, 4).0;
    for (a, b) in run.report.certificates.iter().zip(&again.certificates) {
        c.require(format!("{} certificate differs between runs", a.step), a.render() == b.render());
    }
    let base = Constants::default();
    for (name, text) in base.named() {
        // consumers verified at baseline first; `any` stops at the first flip
        let mut consumers: Vec<StepId> = StepId::ALL.into_iter().filter(|s| s.constants_used().contains(&name)).collect();
        consumers.sort_by_key(|&s| run.cert(s).verdict != Verdict::Verified);
        let mut unflipped = Vec::new();
        for bit in 0..text.len() * 8 {
            let tampered = Inputs { constants: base.with_bit_flipped(name, bit), held: inputs.held.clone() };
            let flipped = consumers.iter().any(|&s| run_step(s, &tampered).verdict != run.cert(s).verdict);
            if !flipped {
                unflipped.push(bit);
            }
        }
        c.require(format!("{name}: bits {unflipped:?} flip no verdict"), unflipped.is_empty());
    }
    let t = t.elapsed();
    c.print(12, "Determinism and fault sensitivity", t);
}

fn main() {
    let data_dir = std::env::var_os("SZ8_DATA_DIR").map(PathBuf::from);
    let inputs = load_inputs(data_dir.as_deref()).expect("dataset readable");
    let (report, times) = run_parallel(&StepId::ALL, &inputs, 1);
    let run = Run { report, times };
    criterion1(&run);
    criterion2(&run);
    criterion3(&run);
    criterion4(&run);
    criterion5(&run);
    criterion6(&run);
    criterion7(&run);
    criterion8(&run);
    criterion9();
    criterion10(&run);
    criterion11(&run);
    criterion12(&run, &inputs);
}
