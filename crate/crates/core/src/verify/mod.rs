//! Executable checks: the Osborn identity on a loop, the criterion for its
//! A-holomorph being Osborn, and every derived autotopism, membership, and
//! correspondence claim, each with replayable failure witnesses.

mod diagrams;
pub mod witness;

use thiserror::Error;

use crate::autotopy::{autotopism_violation, regular_sets, PermGroup, RegularSets};
use crate::exec;
use crate::holomorph::{build_holomorph, HolomorphError, HolomorphLoop};
use crate::nuclei::{nuclei_report, NucleiReport};
use crate::perm::Perm;
use crate::table::LoopTable;
use crate::{Elem, Limits};

pub use witness::{Coords, Witness};
use witness::{
    ElemFormula, FamilyId, IdentityId, MembershipClaim, NucleusSet, PermFormula, RegularSetId,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

impl CheckStatus {
    pub fn holds(self) -> bool {
        matches!(self, CheckStatus::Pass)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skip => "skip",
        }
    }
}

/// Outcome of one check. A failing check always carries a witness; a
/// skipped check records why its hypothesis was not met.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    pub witness: Option<Witness>,
    /// Size of the instance space the check quantifies over.
    pub scanned: u64,
    pub skip_reason: Option<String>,
    pub notes: Vec<String>,
}

impl CheckResult {
    fn passed(name: &str) -> CheckResult {
        CheckResult {
            name: name.to_string(),
            status: CheckStatus::Pass,
            witness: None,
            scanned: 0,
            skip_reason: None,
            notes: Vec::new(),
        }
    }

    fn failed(name: &str, witness: Witness) -> CheckResult {
        CheckResult {
            name: name.to_string(),
            status: CheckStatus::Fail,
            witness: Some(witness),
            scanned: 0,
            skip_reason: None,
            notes: Vec::new(),
        }
    }

    fn skipped(name: &str, reason: &str) -> CheckResult {
        CheckResult {
            name: name.to_string(),
            status: CheckStatus::Skip,
            witness: None,
            scanned: 0,
            skip_reason: Some(reason.to_string()),
            notes: Vec::new(),
        }
    }

    fn from_witness(name: &str, witness: Option<Witness>, scanned: u64) -> CheckResult {
        let mut r = match witness {
            Some(w) => CheckResult::failed(name, w),
            None => CheckResult::passed(name),
        };
        r.scanned = scanned;
        r
    }

    pub fn holds(&self) -> bool {
        self.status.holds()
    }
}

/// A named check made of sub-checks; `overall` fails if any part fails and
/// is skipped only when every part was skipped.
#[derive(Clone, Debug)]
pub struct CheckBundle {
    pub overall: CheckResult,
    pub parts: Vec<CheckResult>,
}

impl CheckBundle {
    fn conjunction(name: &str, parts: Vec<CheckResult>) -> CheckBundle {
        let scanned = parts.iter().map(|p| p.scanned).sum();
        let mut overall = if parts.iter().all(|p| matches!(p.status, CheckStatus::Skip)) {
            CheckResult::skipped(
                name,
                parts[0]
                    .skip_reason
                    .as_deref()
                    .unwrap_or("hypothesis not met"),
            )
        } else if let Some(bad) = parts.iter().find(|p| matches!(p.status, CheckStatus::Fail)) {
            CheckResult::failed(name, bad.witness.clone().expect("failed part has witness"))
        } else {
            CheckResult::passed(name)
        };
        overall.scanned = scanned;
        CheckBundle { overall, parts }
    }

    fn skipped(name: &str, part_names: &[&str], reason: &str) -> CheckBundle {
        CheckBundle {
            overall: CheckResult::skipped(name, reason),
            parts: part_names
                .iter()
                .map(|p| CheckResult::skipped(&format!("{name}.{p}"), reason))
                .collect(),
        }
    }

    pub fn holds(&self) -> bool {
        self.overall.holds()
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error(transparent)]
    Holomorph(#[from] HolomorphError),
    #[error("holomorph order {h_order} exceeds the verification budget {budget}")]
    Budget { h_order: usize, budget: usize },
}

/// The three equivalent renderings of the Osborn identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OsbornVariant {
    Eq1,
    Eq2,
    Eq3,
}

impl OsbornVariant {
    fn identity_id(self) -> IdentityId {
        match self {
            OsbornVariant::Eq1 => IdentityId::Osborn1,
            OsbornVariant::Eq2 => IdentityId::Osborn2,
            OsbornVariant::Eq3 => IdentityId::Osborn3,
        }
    }

    fn check_name(self) -> &'static str {
        match self {
            OsbornVariant::Eq1 => "osborn.eq1",
            OsbornVariant::Eq2 => "osborn.eq2",
            OsbornVariant::Eq3 => "osborn.eq3",
        }
    }
}

/// Which coordinates an identity or family scan quantifies over.
#[derive(Clone, Copy, Default)]
struct Quant {
    y: bool,
    z: bool,
    alpha: bool,
    phi: bool,
}

impl Quant {
    const XYZ: Quant = Quant {
        y: true,
        z: true,
        alpha: false,
        phi: false,
    };
    const X_ALPHA: Quant = Quant {
        y: false,
        z: false,
        alpha: true,
        phi: false,
    };
    const X_PHI: Quant = Quant {
        y: false,
        z: false,
        alpha: false,
        phi: true,
    };
    const XY_ALPHA: Quant = Quant {
        y: true,
        z: false,
        alpha: true,
        phi: false,
    };
    const XY_PHI: Quant = Quant {
        y: true,
        z: false,
        alpha: false,
        phi: true,
    };
    const FULL: Quant = Quant {
        y: true,
        z: true,
        alpha: true,
        phi: true,
    };

    fn space(self, n: usize, k: usize) -> u64 {
        let mut s = n as u64;
        if self.y {
            s *= n as u64;
        }
        if self.z {
            s *= n as u64;
        }
        if self.alpha {
            s *= k as u64;
        }
        if self.phi {
            s *= k as u64;
        }
        s
    }
}

fn coords_for(q: Quant, x: Elem, y: Elem, z: Elem, ai: usize, pi: usize) -> Coords {
    Coords {
        x: Some(x),
        y: q.y.then_some(y),
        z: q.z.then_some(z),
        alpha: q.alpha.then_some(ai),
        phi: q.phi.then_some(pi),
    }
}

/// First violation of an element identity over the quantified coordinates,
/// scanning x in parallel and everything else in order.
fn scan_identity(
    t: &LoopTable,
    elems: &[Perm],
    inv: &[Perm],
    id: IdentityId,
    q: Quant,
    parallel: bool,
) -> (Option<Witness>, u64) {
    let n = t.n();
    let k = if q.alpha || q.phi { elems.len() } else { 1 };
    let per_x = |x: usize| -> Option<Witness> {
        let alphas = if q.alpha { elems.len() } else { 1 };
        let phis = if q.phi { elems.len() } else { 1 };
        for ai in 0..alphas {
            let xa = if q.alpha { elems[ai].apply(x) } else { x };
            for pi in 0..phis {
                let xf = if q.phi { inv[pi].apply(x) } else { x };
                let ys = if q.y { n } else { 1 };
                let zs = if q.z { n } else { 1 };
                for y in 0..ys {
                    for z in 0..zs {
                        let (lhs, rhs) = id.sides_resolved(t, x, y, z, xa, xf);
                        if lhs != rhs {
                            return Some(Witness::Identity {
                                id,
                                coords: coords_for(q, x, y, z, ai, pi),
                                lhs,
                                rhs,
                            });
                        }
                    }
                }
            }
        }
        None
    };
    let w = if parallel {
        exec::first_hit(n, per_x)
    } else {
        exec::first_hit_seq(n, per_x)
    };
    (w, q.space(n, k))
}

/// First violation across a family of displayed autotopism triples.
fn scan_family(
    t: &LoopTable,
    elems: &[Perm],
    inv: &[Perm],
    family: FamilyId,
    q: Quant,
) -> (Option<Witness>, u64) {
    let n = t.n();
    let k = elems.len();
    let w = exec::first_hit(n, |x| {
        let alphas = if q.alpha { k } else { 1 };
        let phis = if q.phi { k } else { 1 };
        for ai in 0..alphas {
            let xa = if q.alpha { elems[ai].apply(x) } else { x };
            for pi in 0..phis {
                let xf = if q.phi { inv[pi].apply(x) } else { x };
                let triple = family.triple_resolved(t, x, xa, xf);
                if let Some((u, v)) = autotopism_violation(t, &triple).unwrap() {
                    let (lhs, rhs) = family.sides_resolved(t, x, xa, xf, u, v);
                    return Some(Witness::Autotopism {
                        family,
                        coords: coords_for(q, x, 0, 0, ai, pi),
                        u,
                        v,
                        lhs,
                        rhs,
                    });
                }
            }
        }
        None
    });
    // Each triple is itself checked on n^2 point pairs.
    (w, q.space(n, k) * (n as u64) * (n as u64))
}

/// Shared precomputed context for the theorem checks.
pub(crate) struct Ctx<'a> {
    pub t: &'a LoopTable,
    pub elems: &'a [Perm],
    pub inv: Vec<Perm>,
    pub nuclei: NucleiReport,
    pub reg: RegularSets,
}

impl<'a> Ctx<'a> {
    fn new(t: &'a LoopTable, group: &'a PermGroup) -> Ctx<'a> {
        let nuclei = nuclei_report(t);
        let reg = regular_sets(t, &nuclei);
        Ctx {
            t,
            elems: group.elements(),
            inv: group.elements().iter().map(Perm::invert).collect(),
            nuclei,
            reg,
        }
    }

    fn nucleus_fast(&self, set: NucleusSet, a: Elem) -> bool {
        match set {
            NucleusSet::NLambda => self.nuclei.n_lambda.contains(a),
            NucleusSet::NRho => self.nuclei.n_rho.contains(a),
            NucleusSet::NMu => self.nuclei.n_mu.contains(a),
            NucleusSet::Nucleus => self.nuclei.nucleus.contains(a),
            NucleusSet::Center => self.nuclei.center.contains(a),
            NucleusSet::NLambdaAndNMu => {
                self.nuclei.n_lambda.contains(a) && self.nuclei.n_mu.contains(a)
            }
            NucleusSet::NRhoAndNMu => {
                self.nuclei.n_rho.contains(a) && self.nuclei.n_mu.contains(a)
            }
        }
    }

    /// First element-membership violation over (x, α) or (x, φ).
    fn scan_elem_membership(
        &self,
        formula: ElemFormula,
        set: NucleusSet,
        q: Quant,
    ) -> (Option<Witness>, u64) {
        let t = self.t;
        let k = self.elems.len();
        let w = exec::first_hit(t.n(), |x| {
            for i in 0..k {
                let xa = if q.alpha { self.elems[i].apply(x) } else { x };
                let xp = if q.phi { self.elems[i].apply(x) } else { x };
                let xf = if q.phi { self.inv[i].apply(x) } else { x };
                let a = formula.eval_resolved(t, x, xa, xp, xf);
                if !self.nucleus_fast(set, a) {
                    let coords = if q.alpha {
                        Coords::x_alpha(x, i)
                    } else {
                        Coords::x_phi(x, i)
                    };
                    return Some(Witness::Membership {
                        claim: MembershipClaim::ElementIn { formula, set },
                        coords,
                        element: a,
                    });
                }
            }
            None
        });
        (w, (t.n() * k) as u64)
    }

    /// First translation-membership violation over (x, α) or (x, φ).
    fn scan_perm_membership(
        &self,
        formula: PermFormula,
        set: RegularSetId,
        q: Quant,
    ) -> (Option<Witness>, u64) {
        let t = self.t;
        let k = self.elems.len();
        let target = match set {
            RegularSetId::P => &self.reg.p_set,
            RegularSetId::Lambda => &self.reg.lambda_set,
            RegularSetId::Phi => &self.reg.phi_set,
            RegularSetId::Psi => &self.reg.psi_set,
        };
        let w = exec::first_hit(t.n(), |x| {
            for i in 0..k {
                let xa = if q.alpha { self.elems[i].apply(x) } else { x };
                let xp = if q.phi { self.elems[i].apply(x) } else { x };
                let xf = if q.phi { self.inv[i].apply(x) } else { x };
                let image: Vec<Elem> = (0..t.n())
                    .map(|u| formula.apply_resolved(t, x, xa, xp, xf, u))
                    .collect();
                let perm = Perm::from_image(image).expect("translation formulas are bijections");
                if !target.contains(&perm) {
                    let coords = if q.alpha {
                        Coords::x_alpha(x, i)
                    } else {
                        Coords::x_phi(x, i)
                    };
                    return Some(Witness::Membership {
                        claim: MembershipClaim::TranslationIn { formula, set },
                        coords,
                        element: perm.apply(t.identity()),
                    });
                }
            }
            None
        });
        (w, (t.n() * k) as u64)
    }
}

/// Scans one rendering of the Osborn identity over all triples.
pub fn osborn_check(t: &LoopTable, variant: OsbornVariant) -> CheckResult {
    let (w, scanned) = scan_identity(t, &[], &[], variant.identity_id(), Quant::XYZ, true);
    CheckResult::from_witness(variant.check_name(), w, scanned)
}

/// Single-threaded variant of [`osborn_check`]; the benchmark baseline.
pub fn osborn_check_seq(t: &LoopTable, variant: OsbornVariant) -> CheckResult {
    let (w, scanned) = scan_identity(t, &[], &[], variant.identity_id(), Quant::XYZ, false);
    CheckResult::from_witness(variant.check_name(), w, scanned)
}

/// All three renderings plus whether their verdicts coincide. Disagreement
/// is a reportable finding, surfaced through [`OsbornAll::variants_agree`].
pub struct OsbornAll {
    pub checks: [CheckResult; 3],
    pub variants_agree: bool,
}

pub fn osborn_check_all(t: &LoopTable) -> OsbornAll {
    let checks = [
        osborn_check(t, OsbornVariant::Eq1),
        osborn_check(t, OsbornVariant::Eq2),
        osborn_check(t, OsbornVariant::Eq3),
    ];
    let variants_agree = checks.iter().all(|c| c.holds()) || checks.iter().all(|c| !c.holds());
    OsbornAll {
        checks,
        variants_agree,
    }
}

pub fn is_osborn(t: &LoopTable) -> bool {
    osborn_check(t, OsbornVariant::Eq1).holds()
}

fn budget_check(t: &LoopTable, group: &PermGroup, limits: &Limits) -> Result<usize, VerifyError> {
    let h_order = group.len() * t.n();
    if h_order > limits.holomorph_budget {
        return Err(VerifyError::Budget {
            h_order,
            budget: limits.holomorph_budget,
        });
    }
    Ok(h_order)
}

/// Runs the base Osborn scan on an already-built holomorph table.
pub fn holomorph_osborn_on(h: &HolomorphLoop) -> CheckResult {
    let (w, scanned) = scan_identity(
        h.table(),
        &[],
        &[],
        IdentityId::Osborn1,
        Quant::XYZ,
        true,
    );
    let mut r = CheckResult::from_witness("direct", w, scanned);
    r.notes.push(format!(
        "holomorph order {} = {} x {}",
        h.order(),
        h.group().len(),
        h.base().n()
    ));
    r
}

/// Builds the A-holomorph and scans it for the Osborn identity directly.
pub fn holomorph_osborn_direct(
    t: &LoopTable,
    group: &PermGroup,
    limits: &Limits,
) -> Result<CheckResult, VerifyError> {
    budget_check(t, group, limits)?;
    let h = build_holomorph(t, group)?;
    Ok(holomorph_osborn_on(&h))
}

fn eq4_inner(t: &LoopTable, elems: &[Perm], inv: &[Perm]) -> CheckResult {
    let (w, scanned) = scan_identity(t, elems, inv, IdentityId::Eq4, Quant::FULL, true);
    CheckResult::from_witness("eq4", w, scanned)
}

/// The holomorph criterion as a scan over the base loop and the group:
/// xα(yz.xφ⁻¹) = xα(yx^λ.x).zxφ⁻¹ for all x, y, z, α, φ.
pub fn eq4_check(t: &LoopTable, group: &PermGroup) -> CheckResult {
    let inv: Vec<Perm> = group.elements().iter().map(Perm::invert).collect();
    eq4_inner(t, group.elements(), &inv)
}

fn cor32_inner(t: &LoopTable, elems: &[Perm], inv: &[Perm]) -> CheckResult {
    let (w, scanned) = scan_family(
        t,
        elems,
        inv,
        FamilyId::HolomorphTriple,
        Quant {
            alpha: true,
            phi: true,
            ..Quant::default()
        },
    );
    CheckResult::from_witness("cor32", w, scanned)
}

/// The triple (R_x^λ R_x L_xα, R_xφ⁻¹, R_xφ⁻¹ L_xα) must be an autotopism
/// for every x, α, φ.
pub fn cor32_check(t: &LoopTable, group: &PermGroup) -> CheckResult {
    let inv: Vec<Perm> = group.elements().iter().map(Perm::invert).collect();
    cor32_inner(t, group.elements(), &inv)
}

fn lemma33_inner(t: &LoopTable, elems: &[Perm], inv: &[Perm], l_osborn: bool) -> CheckResult {
    if !l_osborn {
        return CheckResult::skipped("lemma33", "base loop is not Osborn");
    }
    let (w1, s1) = scan_family(t, elems, inv, FamilyId::LeftRatio, Quant::X_ALPHA);
    if let Some(w) = w1 {
        let mut r = CheckResult::failed("lemma33", w);
        r.scanned = s1;
        return r;
    }
    let (w2, s2) = scan_family(t, elems, inv, FamilyId::RightRatio, Quant::X_PHI);
    CheckResult::from_witness("lemma33", w2, s1 + s2)
}

/// Both ratio triples must be autotopisms; hypothesis: the base loop is
/// Osborn (skipped-with-record otherwise).
pub fn lemma33_check(t: &LoopTable, group: &PermGroup) -> CheckResult {
    let inv: Vec<Perm> = group.elements().iter().map(Perm::invert).collect();
    lemma33_inner(t, group.elements(), &inv, is_osborn(t))
}

fn thm34_inner(ctx: &Ctx) -> CheckBundle {
    let t = ctx.t;
    let part_i = {
        let (w, s) = scan_identity(t, &[], &[], IdentityId::Osborn1, Quant::XYZ, true);
        CheckResult::from_witness("thm34.i", w, s)
    };
    let part_ii = {
        let (w1, s1) =
            ctx.scan_elem_membership(ElemFormula::AlphaTimesRho, NucleusSet::Nucleus, Quant::X_ALPHA);
        let (w2, s2) =
            ctx.scan_elem_membership(ElemFormula::LambdaTimesPhi, NucleusSet::Nucleus, Quant::X_PHI);
        CheckResult::from_witness("thm34.ii", w1.or(w2), s1 + s2)
    };
    let part_iii = {
        let (w, s) = scan_identity(
            t,
            ctx.elems,
            &ctx.inv,
            IdentityId::AlphaRhoFixes,
            Quant::X_ALPHA,
            true,
        );
        CheckResult::from_witness("thm34.iii", w, s)
    };
    let part_iv = {
        let (w, s) = scan_identity(
            t,
            ctx.elems,
            &ctx.inv,
            IdentityId::LambdaPhiAbsorbs,
            Quant::X_PHI,
            true,
        );
        CheckResult::from_witness("thm34.iv", w, s)
    };
    CheckBundle::conjunction("thm34", vec![part_i, part_ii, part_iii, part_iv])
}

/// The four-condition bundle: base loop Osborn, nuclear multipliers,
/// (xα.x^ρ)x = xα, and x(x^λ.xφ⁻¹) = xφ⁻¹. Their conjunction is compared
/// against the direct holomorph scan by the caller.
pub fn thm34_conditions(t: &LoopTable, group: &PermGroup) -> CheckBundle {
    thm34_inner(&Ctx::new(t, group))
}

const LEMMA35_PARTS: [&str; 4] = ["1", "2", "3", "4"];

fn lemma35_inner(
    t: &LoopTable,
    elems: &[Perm],
    inv: &[Perm],
    direct_holds: Option<bool>,
) -> CheckBundle {
    if direct_holds != Some(true) {
        return CheckBundle::skipped("lemma35", &LEMMA35_PARTS, "holomorph is not Osborn");
    }
    let scan = |id, q| scan_identity(t, elems, inv, id, q, true);
    let item = |name: &str, scans: Vec<(Option<Witness>, u64)>| {
        let scanned = scans.iter().map(|(_, s)| s).sum();
        let w = scans.into_iter().find_map(|(w, _)| w);
        CheckResult::from_witness(name, w, scanned)
    };
    let parts = vec![
        item(
            "lemma35.1",
            vec![
                scan(IdentityId::LeftMultiplierLaw, Quant::XY_ALPHA),
                scan(IdentityId::RhoOfMultiplier, Quant::X_ALPHA),
                scan(IdentityId::AlphaRhoFixes, Quant::X_ALPHA),
            ],
        ),
        item(
            "lemma35.2",
            vec![
                scan(IdentityId::ConjRightMultiplier, Quant::XY_PHI),
                scan(IdentityId::LambdaOfMultiplier, Quant::X_PHI),
            ],
        ),
        item(
            "lemma35.3",
            vec![
                scan(IdentityId::RightMultiplierLaw, Quant::XY_PHI),
                scan(IdentityId::LambdaPhiAbsorbs, Quant::X_PHI),
            ],
        ),
        item(
            "lemma35.4",
            vec![
                scan(IdentityId::DivisionExchange, Quant::XY_PHI),
                scan(IdentityId::DivisionExchangePoint, Quant::X_PHI),
            ],
        ),
    ];
    CheckBundle::conjunction("lemma35", parts)
}

/// The four identity groups that hold once the holomorph is Osborn.
pub fn lemma35_identities(
    t: &LoopTable,
    group: &PermGroup,
    limits: &Limits,
) -> Result<CheckBundle, VerifyError> {
    let direct = holomorph_osborn_direct(t, group, limits)?;
    let inv: Vec<Perm> = group.elements().iter().map(Perm::invert).collect();
    Ok(lemma35_inner(
        t,
        group.elements(),
        &inv,
        Some(direct.holds()),
    ))
}

const LEMMA37_PARTS: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

fn lemma37_inner(
    t: &LoopTable,
    elems: &[Perm],
    inv: &[Perm],
    direct_holds: Option<bool>,
) -> CheckBundle {
    if direct_holds != Some(true) {
        return CheckBundle::skipped("lemma37", &LEMMA37_PARTS, "holomorph is not Osborn");
    }
    let fam = |name: &str, family, q| {
        let (w, s) = scan_family(t, elems, inv, family, q);
        CheckResult::from_witness(name, w, s)
    };
    let part_f = {
        let (w1, s1) = scan_family(t, elems, inv, FamilyId::MiddleAlpha, Quant::X_ALPHA);
        let (w2, s2) = scan_family(t, elems, inv, FamilyId::MiddlePhi, Quant::X_PHI);
        CheckResult::from_witness("lemma37.f", w1.or(w2), s1 + s2)
    };
    let parts = vec![
        fam("lemma37.a", FamilyId::LeftRatio, Quant::X_ALPHA),
        fam("lemma37.b", FamilyId::LeftMultiplier, Quant::X_ALPHA),
        fam("lemma37.c", FamilyId::RightRatioDiagonal, Quant::X_PHI),
        fam("lemma37.d", FamilyId::ConjDiagonal, Quant::X_PHI),
        fam("lemma37.e", FamilyId::RightMultiplierDiagonal, Quant::X_PHI),
        part_f,
    ];
    CheckBundle::conjunction("lemma37", parts)
}

/// Six families of displayed triples that are autotopisms once the
/// holomorph is Osborn.
pub fn lemma37_autotopisms(
    t: &LoopTable,
    group: &PermGroup,
    limits: &Limits,
) -> Result<CheckBundle, VerifyError> {
    let direct = holomorph_osborn_direct(t, group, limits)?;
    let inv: Vec<Perm> = group.elements().iter().map(Perm::invert).collect();
    Ok(lemma37_inner(
        t,
        group.elements(),
        &inv,
        Some(direct.holds()),
    ))
}

const COR38_PARTS: [&str; 3] = ["a", "b", "c"];

fn cor38_inner(ctx: &Ctx, direct_holds: Option<bool>) -> CheckBundle {
    if direct_holds != Some(true) {
        return CheckBundle::skipped("cor38", &COR38_PARTS, "holomorph is not Osborn");
    }
    let item = |name: &str, scans: Vec<(Option<Witness>, u64)>| {
        let scanned = scans.iter().map(|(_, s)| s).sum();
        let w = scans.into_iter().find_map(|(w, _)| w);
        CheckResult::from_witness(name, w, scanned)
    };
    let mut part_a = item(
        "cor38.a",
        vec![
            ctx.scan_perm_membership(PermFormula::LeftRatio, RegularSetId::Lambda, Quant::X_ALPHA),
            ctx.scan_perm_membership(
                PermFormula::LeftTranslationOf(ElemFormula::AlphaTimesRho),
                RegularSetId::Lambda,
                Quant::X_ALPHA,
            ),
        ],
    );
    part_a
        .notes
        .push("coset claim L_xα ∈ L_x Λ holds via the factor L_x⁻¹L_xα".to_string());
    let mut part_b = item(
        "cor38.b",
        vec![
            ctx.scan_perm_membership(PermFormula::RightRatio, RegularSetId::P, Quant::X_PHI),
            ctx.scan_perm_membership(PermFormula::ConjRightRatio, RegularSetId::P, Quant::X_PHI),
            ctx.scan_perm_membership(
                PermFormula::RightTranslationOf(ElemFormula::LambdaTimesPhiInv),
                RegularSetId::P,
                Quant::X_PHI,
            ),
        ],
    );
    part_b.notes.push(
        "coset claims R_xφ⁻¹ ∈ R_x P and R_xφ⁻¹L_x ∈ R_xL_x P hold via the listed factors"
            .to_string(),
    );
    let part_c = item(
        "cor38.c",
        vec![
            ctx.scan_perm_membership(
                PermFormula::RightTranslationOf(ElemFormula::AlphaTimesRho),
                RegularSetId::Phi,
                Quant::X_ALPHA,
            ),
            ctx.scan_perm_membership(
                PermFormula::LeftTranslationOf(ElemFormula::AlphaTimesRho),
                RegularSetId::Psi,
                Quant::X_ALPHA,
            ),
            ctx.scan_perm_membership(
                PermFormula::RightTranslationOf(ElemFormula::LambdaTimesPhiInv),
                RegularSetId::Phi,
                Quant::X_PHI,
            ),
            ctx.scan_perm_membership(
                PermFormula::LeftTranslationOf(ElemFormula::LambdaTimesPhiInv),
                RegularSetId::Psi,
                Quant::X_PHI,
            ),
        ],
    );
    CheckBundle::conjunction("cor38", vec![part_a, part_b, part_c])
}

/// Membership of the displayed translations and ratios in the four regular
/// groups, with the coset claims factored explicitly.
pub fn cor38_memberships(
    t: &LoopTable,
    group: &PermGroup,
    limits: &Limits,
) -> Result<CheckBundle, VerifyError> {
    let direct = holomorph_osborn_direct(t, group, limits)?;
    Ok(cor38_inner(&Ctx::new(t, group), Some(direct.holds())))
}

fn thm39_inner(ctx: &Ctx, direct_holds: Option<bool>) -> CheckResult {
    if direct_holds != Some(true) {
        return CheckResult::skipped("thm39", "holomorph is not Osborn");
    }
    let scans = vec![
        // xα = (eπ).x for π = R_{xα/x} ∈ Φ, and xα = b.x with b λ-nuclear.
        ctx.scan_elem_membership(
            ElemFormula::AlphaOverX,
            NucleusSet::NLambdaAndNMu,
            Quant::X_ALPHA,
        ),
        // xα = x.a for a = x\xα, placing every automorphism in P and Φ pointwise.
        ctx.scan_elem_membership(
            ElemFormula::AlphaUnderX,
            NucleusSet::NRhoAndNMu,
            Quant::X_ALPHA,
        ),
        // (xα).(eϱ) = x for ϱ = L_{xα\x} ∈ Ψ.
        ctx.scan_elem_membership(ElemFormula::XUnderAlpha, NucleusSet::NMu, Quant::X_ALPHA),
    ];
    let scanned = scans.iter().map(|(_, s)| s).sum();
    let w = scans.into_iter().find_map(|(w, _)| w);
    let mut r = CheckResult::from_witness("thm39", w, scanned);
    // The strict permutation-set intersection is recorded for reference: it
    // consists of the translations by central elements, so plain set
    // equality with the automorphism group holds only in degenerate cases.
    let inter: Vec<&Perm> = ctx
        .reg
        .p_set
        .elements()
        .iter()
        .filter(|p| {
            ctx.reg.lambda_set.contains(p)
                && ctx.reg.phi_set.contains(p)
                && ctx.reg.psi_set.contains(p)
        })
        .collect();
    let strict = inter.len() == ctx.elems.len()
        && inter.iter().zip(ctx.elems.iter()).all(|(a, b)| **a == *b);
    r.notes.push(format!(
        "pointwise translation witnesses checked; strict set equality of A with P∩Λ∩Φ∩Ψ: {} (intersection size {}, |A| = {})",
        strict,
        inter.len(),
        ctx.elems.len()
    ));
    r
}

/// Every automorphism agrees pointwise with members of each regular group,
/// with the witnessing translations exhibited through the nuclei.
pub fn thm39_intersection(
    t: &LoopTable,
    group: &PermGroup,
    limits: &Limits,
) -> Result<CheckResult, VerifyError> {
    let direct = holomorph_osborn_direct(t, group, limits)?;
    Ok(thm39_inner(&Ctx::new(t, group), Some(direct.holds())))
}

const THM310_PARTS: [&str; 2] = ["translations", "images"];

fn thm310_inner(ctx: &Ctx, direct_holds: Option<bool>) -> CheckBundle {
    if direct_holds != Some(true) {
        return CheckBundle::skipped("thm310", &THM310_PARTS, "holomorph is not Osborn");
    }
    let t = ctx.t;
    let scan = |id, q| scan_identity(t, ctx.elems, &ctx.inv, id, q, true);
    let translations = {
        let scans = vec![
            scan(IdentityId::LeftTranslationFactor, Quant::XY_ALPHA),
            scan(IdentityId::RightTranslationFactor, Quant::XY_PHI),
            scan(IdentityId::ConjTranslationFactor, Quant::XY_PHI),
        ];
        let scanned = scans.iter().map(|(_, s)| s).sum();
        let w = scans.into_iter().find_map(|(w, _)| w);
        CheckResult::from_witness("thm310.translations", w, scanned)
    };
    let images = {
        let mut scans = vec![
            ctx.scan_elem_membership(ElemFormula::AlphaTimesRho, NucleusSet::NLambda, Quant::X_ALPHA),
            ctx.scan_elem_membership(ElemFormula::AlphaTimesRho, NucleusSet::NMu, Quant::X_ALPHA),
            ctx.scan_elem_membership(
                ElemFormula::LambdaTimesPhiInv,
                NucleusSet::NRho,
                Quant::X_PHI,
            ),
            ctx.scan_elem_membership(ElemFormula::LambdaTimesPhiInv, NucleusSet::NMu, Quant::X_PHI),
        ];
        scans.push(scan(IdentityId::DivisionExchangePoint, Quant::X_PHI));
        let scanned = scans.iter().map(|(_, s)| s).sum();
        let w = scans.into_iter().find_map(|(w, _)| w);
        let mut r = CheckResult::from_witness("thm310.images", w, scanned);
        if r.holds() {
            // With the memberships settled, each correspondence image is
            // the defining element and the adjoint pairs right with left
            // translations; spot-check through the adjoint table.
            for x in 0..t.n() {
                for ai in 0..ctx.elems.len() {
                    let coords = Coords::x_alpha(x, ai);
                    let c = ElemFormula::AlphaTimesRho.eval(t, ctx.elems, &coords);
                    let adj = ctx
                        .reg
                        .adjoint_of(&t.right_translation(c))
                        .expect("μ-nuclear translations have adjoints");
                    assert_eq!(adj, &t.left_translation(c), "adjoint of R_c must be L_c");
                }
            }
            r.notes
                .push("correspondence images equal the defining elements".to_string());
        }
        r
    };
    CheckBundle::conjunction("thm310", vec![translations, images])
}

/// Translation factorizations and the correspondence images at the
/// elements xα.x^ρ and x^λ.xφ⁻¹.
pub fn thm310_images(
    t: &LoopTable,
    group: &PermGroup,
    limits: &Limits,
) -> Result<CheckBundle, VerifyError> {
    let direct = holomorph_osborn_direct(t, group, limits)?;
    Ok(thm310_inner(&Ctx::new(t, group), Some(direct.holds())))
}

/// Composite-map equalities between the correspondence graphs.
pub fn diagram_suite(
    t: &LoopTable,
    group: &PermGroup,
    limits: &Limits,
) -> Result<CheckResult, VerifyError> {
    let direct = holomorph_osborn_direct(t, group, limits)?;
    Ok(diagrams::diagram_suite_inner(
        &Ctx::new(t, group),
        Some(direct.holds()),
    ))
}

/// Which top-level checks to run and report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckId {
    Osborn,
    Direct,
    Eq4,
    Cor32,
    Lemma33,
    Thm34,
    Lemma35,
    Lemma37,
    Cor38,
    Thm39,
    Thm310,
    Diagrams,
}

impl CheckId {
    pub const ALL: [CheckId; 12] = [
        CheckId::Osborn,
        CheckId::Direct,
        CheckId::Eq4,
        CheckId::Cor32,
        CheckId::Lemma33,
        CheckId::Thm34,
        CheckId::Lemma35,
        CheckId::Lemma37,
        CheckId::Cor38,
        CheckId::Thm39,
        CheckId::Thm310,
        CheckId::Diagrams,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::Osborn => "osborn",
            CheckId::Direct => "direct",
            CheckId::Eq4 => "eq4",
            CheckId::Cor32 => "cor32",
            CheckId::Lemma33 => "lemma33",
            CheckId::Thm34 => "thm34",
            CheckId::Lemma35 => "lemma35",
            CheckId::Lemma37 => "lemma37",
            CheckId::Cor38 => "cor38",
            CheckId::Thm39 => "thm39",
            CheckId::Thm310 => "thm310",
            CheckId::Diagrams => "diagrams",
        }
    }

    pub fn parse(s: &str) -> Option<CheckId> {
        CheckId::ALL.iter().copied().find(|c| c.name() == s)
    }

    fn needs_direct(self) -> bool {
        matches!(
            self,
            CheckId::Direct
                | CheckId::Lemma35
                | CheckId::Lemma37
                | CheckId::Cor38
                | CheckId::Thm39
                | CheckId::Thm310
                | CheckId::Diagrams
        )
    }
}

/// Full verdict sheet for one (loop, automorphism group) pair.
#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub label: String,
    pub order: usize,
    pub group_order: usize,
    pub group_elements: Vec<Perm>,
    pub checks: Vec<CheckResult>,
    /// (check id, status) in the stable reporting order.
    pub verdicts: Vec<(String, CheckStatus)>,
    pub consistency_errors: Vec<String>,
}

impl TheoremReport {
    /// True when every non-skipped check holds.
    pub fn all_hold(&self) -> bool {
        !self
            .checks
            .iter()
            .any(|c| matches!(c.status, CheckStatus::Fail))
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Runs the selected checks in dependency order.
pub fn run_checks(
    label: &str,
    t: &LoopTable,
    group: &PermGroup,
    limits: &Limits,
    selection: &[CheckId],
) -> Result<TheoremReport, VerifyError> {
    budget_check(t, group, limits)?;
    let ctx = Ctx::new(t, group);
    let selected = |id: CheckId| selection.contains(&id);
    let mut checks: Vec<CheckResult> = Vec::new();
    let mut verdicts: Vec<(String, CheckStatus)> = Vec::new();
    let mut consistency = Vec::new();

    // The base-loop Osborn verdict doubles as the lemma33 hypothesis.
    let need_osborn = selected(CheckId::Osborn) || selected(CheckId::Lemma33);
    let osborn_all = need_osborn.then(|| osborn_check_all(t));
    if let (true, Some(all)) = (selected(CheckId::Osborn), &osborn_all) {
        let status = if all.checks.iter().all(|c| c.holds()) {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        for c in &all.checks {
            checks.push(c.clone());
        }
        if !all.variants_agree {
            consistency
                .push("osborn identity variants disagree on this loop".to_string());
        }
        verdicts.push(("osborn".to_string(), status));
    }

    // The direct holomorph verdict gates every consequence check.
    let need_direct = selection.iter().any(|id| id.needs_direct());
    let direct = if need_direct {
        let h = build_holomorph(t, group)?;
        Some(holomorph_osborn_on(&h))
    } else {
        None
    };
    let direct_holds = direct.as_ref().map(|c| c.holds());
    if let (true, Some(d)) = (selected(CheckId::Direct), &direct) {
        verdicts.push(("direct".to_string(), d.status));
        checks.push(d.clone());
    }

    if selected(CheckId::Eq4) {
        let c = eq4_inner(t, ctx.elems, &ctx.inv);
        verdicts.push(("eq4".to_string(), c.status));
        checks.push(c);
    }
    if selected(CheckId::Cor32) {
        let c = cor32_inner(t, ctx.elems, &ctx.inv);
        verdicts.push(("cor32".to_string(), c.status));
        checks.push(c);
    }
    if selected(CheckId::Lemma33) {
        let l_osborn = osborn_all
            .as_ref()
            .map(|a| a.checks[0].holds())
            .unwrap_or_else(|| is_osborn(t));
        let c = lemma33_inner(t, ctx.elems, &ctx.inv, l_osborn);
        verdicts.push(("lemma33".to_string(), c.status));
        checks.push(c);
    }
    if selected(CheckId::Thm34) {
        let b = thm34_inner(&ctx);
        verdicts.push(("thm34".to_string(), b.overall.status));
        checks.push(b.overall.clone());
        checks.extend(b.parts);
    }
    let push_bundle = |b: CheckBundle, checks: &mut Vec<CheckResult>, verdicts: &mut Vec<(String, CheckStatus)>| {
        verdicts.push((b.overall.name.clone(), b.overall.status));
        checks.push(b.overall.clone());
        checks.extend(b.parts);
    };
    if selected(CheckId::Lemma35) {
        push_bundle(
            lemma35_inner(t, ctx.elems, &ctx.inv, direct_holds),
            &mut checks,
            &mut verdicts,
        );
    }
    if selected(CheckId::Lemma37) {
        push_bundle(
            lemma37_inner(t, ctx.elems, &ctx.inv, direct_holds),
            &mut checks,
            &mut verdicts,
        );
    }
    if selected(CheckId::Cor38) {
        push_bundle(cor38_inner(&ctx, direct_holds), &mut checks, &mut verdicts);
    }
    if selected(CheckId::Thm39) {
        let c = thm39_inner(&ctx, direct_holds);
        verdicts.push(("thm39".to_string(), c.status));
        checks.push(c);
    }
    if selected(CheckId::Thm310) {
        push_bundle(thm310_inner(&ctx, direct_holds), &mut checks, &mut verdicts);
    }
    if selected(CheckId::Diagrams) {
        let c = diagrams::diagram_suite_inner(&ctx, direct_holds);
        verdicts.push(("diagrams".to_string(), c.status));
        checks.push(c);
    }

    // Cross-checks among the computed verdicts. The first four names form
    // an equivalence; the consequence checks may not fail while the direct
    // check passes.
    let verdict_of = |name: &str, verdicts: &[(String, CheckStatus)]| {
        verdicts
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, s)| *s)
    };
    let equivalence: Vec<(String, CheckStatus)> = ["direct", "eq4", "cor32", "thm34"]
        .iter()
        .filter_map(|n| verdict_of(n, &verdicts).map(|s| (n.to_string(), s)))
        .collect();
    let eq_verdicts: Vec<bool> = equivalence
        .iter()
        .filter(|(_, s)| !matches!(s, CheckStatus::Skip))
        .map(|(_, s)| s.holds())
        .collect();
    if !eq_verdicts.is_empty() && !eq_verdicts.iter().all(|&v| v == eq_verdicts[0]) {
        consistency.push(format!(
            "equivalent criteria disagree: {}",
            equivalence
                .iter()
                .map(|(n, s)| format!("{n}={}", s.as_str()))
                .collect::<Vec<_>>()
                .join(", ")
        ));
    }
    if direct_holds == Some(true) {
        for (name, status) in &verdicts {
            let consequence = matches!(
                name.as_str(),
                "lemma33" | "lemma35" | "lemma37" | "cor38" | "thm39" | "thm310" | "diagrams"
            );
            if consequence && matches!(status, CheckStatus::Fail) {
                consistency.push(format!(
                    "hard error: {name} fails although the holomorph check passes"
                ));
            }
        }
    }

    Ok(TheoremReport {
        label: label.to_string(),
        order: t.n(),
        group_order: group.len(),
        group_elements: group.elements().to_vec(),
        checks,
        verdicts,
        consistency_errors: consistency,
    })
}

/// Every check, in dependency order.
pub fn full_report(
    label: &str,
    t: &LoopTable,
    group: &PermGroup,
    limits: &Limits,
) -> Result<TheoremReport, VerifyError> {
    run_checks(label, t, group, limits, &CheckId::ALL)
}
