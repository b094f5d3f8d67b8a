//! The 2^11 modules of M24 under the octad stabilizer, their restriction to
//! a 2^3:7, and the search for 2^{3+3}:7 in the resulting 2^6:2^3:7.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact::f2::{F2Matrix, F2Vec, Quotient, Subspace};
use crate::golay::{GolayCode, OMEGA};
use crate::modrep::cohomology::{ext1, GroupTable, Semidirect};
use crate::modrep::{C7Label, F2GModule, Section};
use crate::perm::group::{elements_of_order, object_stabilizer, point_stabilizer, setwise_stabilizer};
use crate::perm::search::{find_b_subgroup, twocubes_normalized_by};
use crate::perm::{PermGroup, PermGroupElems, Permutation};

pub const OCTAD_STABILIZER_ORDER: u64 = 322_560;
pub const SEMIDIRECT_ORDER: usize = 3584;

fn vec24(w: u32) -> F2Vec {
    F2Vec::from_u64(24, w as u64)
}

fn permute(v: &F2Vec, p: &Permutation) -> F2Vec {
    let mut out = F2Vec::zero(v.len());
    for i in v.ones() {
        out.set(p.image(i), true);
    }
    out
}

/// A subquotient V/W of F2^24 on which permutations act.
#[derive(Clone, Debug)]
pub struct PermSubquotient {
    pub name: &'static str,
    q: Quotient,
}

impl PermSubquotient {
    /// The Golay code modulo the all-ones word.
    pub fn code_mod_omega(code: &GolayCode) -> Self {
        let v = Subspace::span(24, code.basis().iter().map(|&w| vec24(w)));
        let w = Subspace::span(24, [vec24(OMEGA)]);
        PermSubquotient { name: "golay code / <Omega>", q: Quotient::new(&v, &w) }
    }

    /// Even-weight words modulo the Golay code.
    pub fn even_cocode(code: &GolayCode) -> Self {
        let v = Subspace::span(24, (1..24).map(|i| vec24(1 | 1 << i)));
        let w = Subspace::span(24, code.basis().iter().map(|&w| vec24(w)));
        PermSubquotient { name: "even cocode", q: Quotient::new(&v, &w) }
    }

    pub fn dim(&self) -> usize {
        self.q.dim()
    }

    pub fn matrix(&self, p: &Permutation) -> F2Matrix {
        let d = self.dim();
        let rows = (0..d).map(|i| self.q.project(&permute(&self.q.lift(&F2Vec::unit(d, i)), p))).collect();
        F2Matrix::from_rows(d, rows)
    }

    pub fn module(&self, gens: &[Permutation]) -> F2GModule {
        F2GModule::new(self.dim(), gens.iter().map(|p| self.matrix(p)).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateModule {
    pub name: String,
    /// socle layer dimensions bottom first, each with its simplicity flag
    pub layers: Vec<(usize, bool)>,
    pub uniserial: bool,
}

impl CandidateModule {
    pub fn is_selected_shape(&self) -> bool {
        self.uniserial && self.layers.iter().map(|l| l.0).collect::<Vec<_>>() == [1, 4, 6]
    }
}

/// Ext^1 dimension with `sub` as submodule and `quot` as quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtEntry {
    pub quot: &'static str,
    pub sub: &'static str,
    pub dim: usize,
}

/// How the sentence "3b can be glued under 3a, 1a under 3b, and 3a under
/// nothing else" reads against the computed Ext pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingReading {
    pub name: &'static str,
    pub three_b_under_three_a: bool,
    pub one_under_three_b: bool,
    pub three_a_under_nothing_else: bool,
}

impl GluingReading {
    pub fn matches(&self) -> bool {
        self.three_b_under_three_a && self.one_under_three_b && self.three_a_under_nothing_else
    }
}

/// An x-invariant 2^3 inside the centralizer of the involution z.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCube {
    /// lies in the pointwise stabilizer of the octad
    pub in_t: bool,
    pub label: C7Label,
    /// multiplicity of its type in the module restricted to x
    pub multiplicity: usize,
}

#[derive(Clone, Debug)]
pub struct NotM24Report {
    pub octad: u32,
    pub octad_stabilizer_order: u64,
    pub candidates: Vec<CandidateModule>,
    pub selected: Option<String>,
    pub centralizer_order: u64,
    pub twocubes: Vec<TwoCube>,
    /// multiplicities of (1a, 3a, 3b) under x
    pub c7_multiplicities: [usize; 3],
    /// polynomial label of the type called 3a
    pub three_a_poly: C7Label,
    pub ext: Vec<ExtEntry>,
    pub readings: Vec<GluingReading>,
    /// x-types of the socle layers under 2^3:7, bottom first, as (1a, 3a, 3b)
    pub k_socle_layers: Vec<[usize; 3]>,
    /// largest 2^3:7-submodule inside the 1a and 3b isotypic parts
    pub core_dim: usize,
    /// largest submodule of the quotient by that core with only 3a factors
    pub three_a_dim: usize,
    pub semidirect_order: usize,
    pub b_copies: usize,
}

/// x-isotypic multiplicities (1, x^3+x+1, x^3+x^2+1) of each socle layer of `m`,
/// whose first generator has order 7.
pub fn socle_layer_types(m: &F2GModule) -> Result<Vec<[usize; 3]>> {
    let mut out = Vec::new();
    let mut prev = Subspace::zero(m.dim());
    for s in m.socle_series() {
        let sub = m.submodule(&s);
        let (q, _) = sub.quotient(&Subspace::span(s.dim(), prev.basis().iter().map(|b| s.coords(b).unwrap())));
        let iso = F2GModule::new(q.dim(), alloc::vec![q.gens()[0].clone()]).isotypic_c7()?;
        out.push(iso.multiplicities);
        prev = s;
    }
    Ok(out)
}

/// Largest submodule of `m` contained in `w`.
pub fn core_in(m: &F2GModule, w: &Subspace) -> Subspace {
    let mut cur = w.clone();
    loop {
        let next = m.gens().iter().fold(cur.clone(), |acc, g| {
            let inv = g.inverse().expect("invertible generator");
            acc.intersect(&Subspace::span(m.dim(), cur.basis().iter().map(|b| inv.apply(b))))
        });
        if next.dim() == cur.dim() {
            return cur;
        }
        cur = next;
    }
}

fn label_name(l: C7Label, three_a: C7Label) -> &'static str {
    match l {
        C7Label::One => "1a",
        x if x == three_a => "3a",
        _ => "3b",
    }
}

pub fn step_data(code: &GolayCode, m24: &PermGroup) -> Result<NotM24Report> {
    let octad = *code.octads().iter().min().ok_or_else(|| Error::Calibration(String::from("code has no octads")))?;
    let h = setwise_stabilizer(m24, octad as u64);
    let h_order = h.order();

    let mods = [PermSubquotient::code_mod_omega(code), PermSubquotient::even_cocode(code)];
    let candidates: Vec<CandidateModule> = mods
        .iter()
        .map(|m| {
            let f = m.module(h.gens());
            let layers = f.socle_layers();
            CandidateModule { name: String::from(m.name), uniserial: layers.iter().all(|l| l.1), layers }
        })
        .collect();
    let sel: Vec<usize> = (0..2).filter(|&i| candidates[i].is_selected_shape()).collect();
    let Some(&si) = sel.first().filter(|_| sel.len() == 1) else {
        return Ok(NotM24Report {
            octad,
            octad_stabilizer_order: h_order,
            candidates,
            selected: None,
            centralizer_order: 0,
            twocubes: Vec::new(),
            c7_multiplicities: [0; 3],
            three_a_poly: C7Label::CubicA,
            ext: Vec::new(),
            readings: Vec::new(),
            k_socle_layers: Vec::new(),
            core_dim: 0,
            three_a_dim: 0,
            semidirect_order: 0,
            b_copies: 0,
        });
    };
    let module = &mods[si];

    // x of order 7 in the octad stabilizer, z the involution of the pointwise
    // stabilizer T centralized by x, and the x-invariant 2^3s inside C(z)
    let x = elements_of_order(&h, 7, 200, 7).into_iter().min().ok_or_else(|| Error::Calibration(String::from("no element of order 7")))?;
    let t = (0..24).filter(|&i| octad >> i & 1 == 1).fold(h.clone(), |g, i| point_stabilizer(&g, i));
    if t.order() != 16 {
        return Err(Error::WrongOrder { expected: 16, got: t.order() });
    }
    let t_els = t.bsgs().elements();
    let z = t_els
        .iter()
        .find(|a| !a.is_identity() && a.mul(&x) == x.mul(a))
        .cloned()
        .ok_or_else(|| Error::Calibration(String::from("x centralizes no involution of T")))?;
    let (cz, _) = object_stabilizer(&h, z.clone(), |a, g| a.conj(g));
    let cz_order = cz.order();
    let involutions: Vec<Permutation> = cz.bsgs().elements().into_iter().filter(|a| a.order() == 2).collect();
    let cze = PermGroupElems::new(cz);
    let cands: Vec<BTreeSet<Permutation>> = twocubes_normalized_by(&cze, &x, &involutions).into_iter().collect();

    let mk_full = module.module(core::slice::from_ref(&x));
    let iso = mk_full.isotypic_c7()?;
    let idx = |l: C7Label| [C7Label::One, C7Label::CubicA, C7Label::CubicB].iter().position(|&m| m == l).unwrap();
    let mut twocubes = Vec::new();
    for e in &cands {
        let one: BTreeSet<Permutation> = [Permutation::identity(24)].into_iter().collect();
        let ty = Section::new(&cze, e, &one)?.conjugation_module(&cze, core::slice::from_ref(&x))?.c7_label()?;
        twocubes.push(TwoCube { in_t: e.iter().all(|a| t_els.contains(a)), label: ty, multiplicity: iso.multiplicities[idx(ty)] });
    }
    // the isotropic 2^3 is a copy of a type occurring twice
    let pick: Vec<usize> = (0..twocubes.len()).filter(|&i| twocubes[i].multiplicity == 2).collect();
    if pick.len() != 1 {
        return Err(Error::AmbiguousClasses(alloc::format!("{} candidate 2^3s of multiplicity-2 type", pick.len())));
    }
    let e = &cands[pick[0]];
    let three_a = twocubes[pick[0]].label;
    let three_b = if three_a == C7Label::CubicA { C7Label::CubicB } else { C7Label::CubicA };
    let e_gens: Vec<Permutation> = {
        let mut span: BTreeSet<Permutation> = [Permutation::identity(24)].into_iter().collect();
        let mut out = Vec::new();
        for a in e {
            if !span.contains(a) {
                out.push(a.clone());
                span = span.iter().flat_map(|s| [s.clone(), s.mul(a)]).collect();
            }
        }
        out
    };
    let mut kgens = alloc::vec![x.clone()];
    kgens.extend(e_gens.iter().cloned());
    let kg = PermGroupElems::new(PermGroup::new(24, kgens.clone()));
    let (table, _) = GroupTable::build(&kg, &kgens);
    if table.order() != 56 {
        return Err(Error::WrongOrder { expected: 56, got: table.order() as u64 });
    }

    let mk = module.module(&kgens);
    let c7_multiplicities = [iso.multiplicities[0], iso.multiplicities[idx(three_a)], iso.multiplicities[idx(three_b)]];

    // Ext^1 between the inflated irreducibles
    let inflate = |l: C7Label| {
        let c = F2GModule::c7_irreducible(l);
        let mut g = alloc::vec![c.gens()[0].clone()];
        g.extend(e_gens.iter().map(|_| F2Matrix::identity(c.dim())));
        F2GModule::new(c.dim(), g)
    };
    let labels = [C7Label::One, three_a, three_b];
    let mut ext = Vec::new();
    for &q in &labels {
        for &s in &labels {
            let d = ext1(&table, &inflate(q), &inflate(s)).dim;
            ext.push(ExtEntry { quot: label_name(q, three_a), sub: label_name(s, three_a), dim: d });
        }
    }
    let d = |q: &str, s: &str| ext.iter().find(|x| x.quot == q && x.sub == s).map_or(0, |x| x.dim);
    // "X under Y": X is the submodule, Y the quotient; or the reverse
    let readings = alloc::vec![
        GluingReading {
            name: "X under Y means X submodule",
            three_b_under_three_a: d("3a", "3b") > 0,
            one_under_three_b: d("3b", "1a") > 0,
            three_a_under_nothing_else: d("1a", "3a") == 0 && d("3b", "3a") == 0,
        },
        GluingReading {
            name: "X under Y means X quotient",
            three_b_under_three_a: d("3b", "3a") > 0,
            one_under_three_b: d("1a", "3b") > 0,
            three_a_under_nothing_else: d("3a", "1a") == 0 && d("3a", "3b") == 0,
        },
    ];

    // quotient by the largest submodule with factors 1a and 3b only, then
    // keep the largest submodule of the quotient with factors 3a only
    let w = iso.parts[0].sum(&iso.parts[idx(three_b)]);
    let core = core_in(&mk, &w);
    let k_socle_layers = socle_layer_types(&mk)?.into_iter().map(|m| [m[0], m[idx(three_a)], m[idx(three_b)]]).collect();
    let (qc, _) = mk.quotient(&core);
    let qiso = F2GModule::new(qc.dim(), alloc::vec![qc.gens()[0].clone()]).isotypic_c7()?;
    let top = core_in(&qc, &qiso.parts[idx(three_a)]);
    let six = qc.submodule(&top);
    let sd = Semidirect::new(table, &six);
    let semidirect_order = sd.order();
    let b_copies = find_b_subgroup(&sd, 10_000)?.len();

    Ok(NotM24Report {
        octad,
        octad_stabilizer_order: h_order,
        selected: Some(candidates[si].name.clone()),
        centralizer_order: cz_order,
        twocubes,
        candidates,
        c7_multiplicities,
        three_a_poly: three_a,
        ext,
        readings,
        k_socle_layers,
        core_dim: core.dim(),
        three_a_dim: six.dim(),
        semidirect_order,
        b_copies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{GOLAY_TXT, M24_PERM};
    use crate::golay::m24_group;

    #[test]
    fn octad_stabilizer_chain() {
        let code = GolayCode::parse(GOLAY_TXT).unwrap();
        let m24 = m24_group(M24_PERM, &code).unwrap();
        let r = step_data(&code, &m24).unwrap();
        assert_eq!(r.octad_stabilizer_order, OCTAD_STABILIZER_ORDER);
        let shapes: Vec<Vec<usize>> = r.candidates.iter().map(|c| c.layers.iter().map(|l| l.0).collect()).collect();
        assert_eq!(shapes, [[1, 4, 6], [6, 4, 1]]);
        assert_eq!(r.selected.as_deref(), Some("golay code / <Omega>"));
        assert_eq!(r.centralizer_order, 21504);
        assert_eq!(r.twocubes.iter().map(|t| (t.in_t, t.multiplicity)).collect::<Vec<_>>(), [(true, 1), (false, 2)]);
        assert_eq!(r.c7_multiplicities, [2, 2, 1]);
        let dims: Vec<usize> = r.ext.iter().map(|e| e.dim).collect();
        assert_eq!(dims, [0, 3, 0, 0, 3, 6, 3, 3, 3]);
        assert!(r.readings.iter().all(|g| !g.matches()));
        assert_eq!(r.k_socle_layers, [[1, 1, 0], [1, 0, 1], [0, 1, 0]]);
        assert_eq!((r.core_dim, r.three_a_dim), (4, 6));
        assert_eq!(r.semidirect_order, SEMIDIRECT_ORDER);
        assert_eq!(r.b_copies, 0);
    }
}
