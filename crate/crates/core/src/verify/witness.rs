//! Structured failure witnesses.
//!
//! Every failed check records enough coordinates to recompute both sides of
//! the violated claim straight from the Cayley table (products, divisions,
//! one-sided inverses) plus the recorded automorphisms, so a witness can be
//! replayed and confirmed without trusting the machinery that found it.
//!
//! The `*_resolved` entry points take the already-applied automorphism
//! values xα and xφ⁻¹; scans use them with precomputed inverses, while
//! replay resolves coordinates from scratch through the same formulas.

use crate::autotopy::AutotopismTriple;
use crate::perm::Perm;
use crate::table::LoopTable;
use crate::Elem;

/// Coordinates of a violation. `alpha` and `phi` index into the canonical
/// element order of the automorphism group the check ran with.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Coords {
    pub x: Option<Elem>,
    pub y: Option<Elem>,
    pub z: Option<Elem>,
    pub alpha: Option<usize>,
    pub phi: Option<usize>,
}

impl Coords {
    pub fn x_alpha(x: Elem, alpha: usize) -> Coords {
        Coords {
            x: Some(x),
            alpha: Some(alpha),
            ..Coords::default()
        }
    }

    pub fn x_phi(x: Elem, phi: usize) -> Coords {
        Coords {
            x: Some(x),
            phi: Some(phi),
            ..Coords::default()
        }
    }

    fn resolve(&self, group: &[Perm]) -> (Elem, Elem, Elem, Elem, Elem, Elem) {
        let x = self.x.unwrap_or_default();
        let y = self.y.unwrap_or_default();
        let z = self.z.unwrap_or_default();
        let xa = self.alpha.map(|i| group[i].apply(x)).unwrap_or(x);
        let xp = self.phi.map(|i| group[i].apply(x)).unwrap_or(x);
        let xf = self.phi.map(|i| group[i].invert().apply(x)).unwrap_or(x);
        (x, y, z, xa, xp, xf)
    }
}

/// Element-valued identities checked pointwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityId {
    /// x(yz.x) = (x^λ\y).zx
    Osborn1,
    /// x(yz.x) = x(yx^λ.x).zx
    Osborn2,
    /// x(yz.x) = x(yx.x^ρ).zx
    Osborn3,
    /// xα(yz.xφ⁻¹) = xα(yx^λ.x).zxφ⁻¹
    Eq4,
    /// (xα.x^ρ)x = xα
    AlphaRhoFixes,
    /// x(x^λ.xφ⁻¹) = xφ⁻¹
    LambdaPhiAbsorbs,
    /// (xα.x^ρ).xy = xα.y
    LeftMultiplierLaw,
    /// x.(xα)^ρ = (xα.x^ρ)^ρ
    RhoOfMultiplier,
    /// (x.yx)(x^λ.xφ⁻¹) = x(y.xφ⁻¹)
    ConjRightMultiplier,
    /// (xφ⁻¹)^λ.x = (x^λ.xφ⁻¹)^λ
    LambdaOfMultiplier,
    /// yx.(x^λ.xφ⁻¹) = y.xφ⁻¹
    RightMultiplierLaw,
    /// x(y/x.xφ⁻¹) = (xy)/x.xφ⁻¹
    DivisionExchange,
    /// x(x^ρ/x.xφ⁻¹) = x^λ.xφ⁻¹
    DivisionExchangePoint,
    /// point y: y L_x⁻¹ L_xα = y L_{xα.x^ρ}
    LeftTranslationFactor,
    /// point y: y R_x⁻¹ R_xφ⁻¹ = y R_{x^λ.xφ⁻¹}
    RightTranslationFactor,
    /// point y: y L_x⁻¹ R_x⁻¹ R_xφ⁻¹ L_x = y R_{x^λ.xφ⁻¹}
    ConjTranslationFactor,
}

impl IdentityId {
    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Osborn1 => "osborn-eq1",
            IdentityId::Osborn2 => "osborn-eq2",
            IdentityId::Osborn3 => "osborn-eq3",
            IdentityId::Eq4 => "holomorph-criterion",
            IdentityId::AlphaRhoFixes => "alpha-rho-fixes",
            IdentityId::LambdaPhiAbsorbs => "lambda-phi-absorbs",
            IdentityId::LeftMultiplierLaw => "left-multiplier-law",
            IdentityId::RhoOfMultiplier => "rho-of-multiplier",
            IdentityId::ConjRightMultiplier => "conjugated-right-multiplier",
            IdentityId::LambdaOfMultiplier => "lambda-of-multiplier",
            IdentityId::RightMultiplierLaw => "right-multiplier-law",
            IdentityId::DivisionExchange => "division-exchange",
            IdentityId::DivisionExchangePoint => "division-exchange-point",
            IdentityId::LeftTranslationFactor => "left-translation-factor",
            IdentityId::RightTranslationFactor => "right-translation-factor",
            IdentityId::ConjTranslationFactor => "conjugated-translation-factor",
        }
    }

    /// Both sides at pre-resolved coordinates.
    pub fn sides_resolved(
        self,
        t: &LoopTable,
        x: Elem,
        y: Elem,
        z: Elem,
        xa: Elem,
        xf: Elem,
    ) -> (Elem, Elem) {
        match self {
            IdentityId::Osborn1 => (
                t.mul(x, t.mul(t.mul(y, z), x)),
                t.mul(t.ldiv(t.linv(x), y), t.mul(z, x)),
            ),
            IdentityId::Osborn2 => (
                t.mul(x, t.mul(t.mul(y, z), x)),
                t.mul(t.mul(x, t.mul(t.mul(y, t.linv(x)), x)), t.mul(z, x)),
            ),
            IdentityId::Osborn3 => (
                t.mul(x, t.mul(t.mul(y, z), x)),
                t.mul(t.mul(x, t.mul(t.mul(y, x), t.rinv(x))), t.mul(z, x)),
            ),
            IdentityId::Eq4 => (
                t.mul(xa, t.mul(t.mul(y, z), xf)),
                t.mul(t.mul(xa, t.mul(t.mul(y, t.linv(x)), x)), t.mul(z, xf)),
            ),
            IdentityId::AlphaRhoFixes => (t.mul(t.mul(xa, t.rinv(x)), x), xa),
            IdentityId::LambdaPhiAbsorbs => (t.mul(x, t.mul(t.linv(x), xf)), xf),
            IdentityId::LeftMultiplierLaw => {
                (t.mul(t.mul(xa, t.rinv(x)), t.mul(x, y)), t.mul(xa, y))
            }
            IdentityId::RhoOfMultiplier => {
                (t.mul(x, t.rinv(xa)), t.rinv(t.mul(xa, t.rinv(x))))
            }
            IdentityId::ConjRightMultiplier => (
                t.mul(t.mul(x, t.mul(y, x)), t.mul(t.linv(x), xf)),
                t.mul(x, t.mul(y, xf)),
            ),
            IdentityId::LambdaOfMultiplier => {
                (t.mul(t.linv(xf), x), t.linv(t.mul(t.linv(x), xf)))
            }
            IdentityId::RightMultiplierLaw => {
                (t.mul(t.mul(y, x), t.mul(t.linv(x), xf)), t.mul(y, xf))
            }
            IdentityId::DivisionExchange => (
                t.mul(x, t.mul(t.rdiv(y, x), xf)),
                t.mul(t.rdiv(t.mul(x, y), x), xf),
            ),
            IdentityId::DivisionExchangePoint => (
                t.mul(x, t.mul(t.rdiv(t.rinv(x), x), xf)),
                t.mul(t.linv(x), xf),
            ),
            IdentityId::LeftTranslationFactor => (
                t.mul(xa, t.ldiv(x, y)),
                t.mul(t.mul(xa, t.rinv(x)), y),
            ),
            IdentityId::RightTranslationFactor => (
                t.mul(t.rdiv(y, x), xf),
                t.mul(y, t.mul(t.linv(x), xf)),
            ),
            IdentityId::ConjTranslationFactor => (
                t.mul(x, t.mul(t.rdiv(t.ldiv(x, y), x), xf)),
                t.mul(y, t.mul(t.linv(x), xf)),
            ),
        }
    }

    /// Both sides at raw coordinates, resolving automorphism actions anew.
    pub fn sides(self, t: &LoopTable, group: &[Perm], c: &Coords) -> (Elem, Elem) {
        let (x, y, z, xa, _, xf) = c.resolve(group);
        self.sides_resolved(t, x, y, z, xa, xf)
    }
}

/// Displayed autotopism-triple families; the coordinates pick a triple and
/// `(u, v)` is the point pair where the autotopism law fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyId {
    /// (R_x^λ R_x L_xα, R_xφ⁻¹, R_xφ⁻¹ L_xα)
    HolomorphTriple,
    /// (L_x⁻¹ L_xα, I, L_x⁻¹ L_xα)
    LeftRatio,
    /// (I, R_x⁻¹ R_xφ⁻¹, L_x⁻¹ R_x⁻¹ R_xφ⁻¹ L_x)
    RightRatio,
    /// (L_{xα.x^ρ}, I, L_{xα.x^ρ})
    LeftMultiplier,
    /// (I, R_x⁻¹ R_xφ⁻¹, R_x⁻¹ R_xφ⁻¹)
    RightRatioDiagonal,
    /// (I, W, W) with W = L_x⁻¹ R_x⁻¹ R_xφ⁻¹ L_x
    ConjDiagonal,
    /// (I, R_{x^λ.xφ⁻¹}, R_{x^λ.xφ⁻¹})
    RightMultiplierDiagonal,
    /// (R_{xα.x^ρ}, L_{xα.x^ρ}⁻¹, I)
    MiddleAlpha,
    /// (R_{x^λ.xφ⁻¹}, L_{x^λ.xφ⁻¹}⁻¹, I)
    MiddlePhi,
}

impl FamilyId {
    pub fn name(self) -> &'static str {
        match self {
            FamilyId::HolomorphTriple => "holomorph-triple",
            FamilyId::LeftRatio => "left-ratio",
            FamilyId::RightRatio => "right-ratio",
            FamilyId::LeftMultiplier => "left-multiplier",
            FamilyId::RightRatioDiagonal => "right-ratio-diagonal",
            FamilyId::ConjDiagonal => "conjugated-diagonal",
            FamilyId::RightMultiplierDiagonal => "right-multiplier-diagonal",
            FamilyId::MiddleAlpha => "middle-alpha",
            FamilyId::MiddlePhi => "middle-phi",
        }
    }

    /// Builds the triple as explicit permutations (postfix composition).
    pub fn triple_resolved(
        self,
        t: &LoopTable,
        x: Elem,
        xa: Elem,
        xf: Elem,
    ) -> AutotopismTriple {
        let id = Perm::identity(t.n());
        let l = |a: Elem| t.left_translation(a);
        let r = |a: Elem| t.right_translation(a);
        let ce = t.mul(xa, t.rinv(x));
        let de = t.mul(t.linv(x), xf);
        match self {
            FamilyId::HolomorphTriple => AutotopismTriple::new(
                r(t.linv(x)).then(&r(x)).then(&l(xa)),
                r(xf),
                r(xf).then(&l(xa)),
            ),
            FamilyId::LeftRatio => {
                let u = l(x).invert().then(&l(xa));
                AutotopismTriple::new(u.clone(), id, u)
            }
            FamilyId::RightRatio => AutotopismTriple::new(
                id,
                r(x).invert().then(&r(xf)),
                l(x).invert().then(&r(x).invert()).then(&r(xf)).then(&l(x)),
            ),
            FamilyId::LeftMultiplier => {
                let u = l(ce);
                AutotopismTriple::new(u.clone(), id, u)
            }
            FamilyId::RightRatioDiagonal => {
                let u = r(x).invert().then(&r(xf));
                AutotopismTriple::new(id, u.clone(), u)
            }
            FamilyId::ConjDiagonal => {
                let u = l(x).invert().then(&r(x).invert()).then(&r(xf)).then(&l(x));
                AutotopismTriple::new(id, u.clone(), u)
            }
            FamilyId::RightMultiplierDiagonal => {
                let u = r(de);
                AutotopismTriple::new(id, u.clone(), u)
            }
            FamilyId::MiddleAlpha => AutotopismTriple::new(r(ce), l(ce).invert(), id),
            FamilyId::MiddlePhi => AutotopismTriple::new(r(de), l(de).invert(), id),
        }
    }

    /// Applies the three components at (u, v, w) by closed formula, without
    /// building permutations; the replay path.
    fn apply_resolved(
        self,
        t: &LoopTable,
        x: Elem,
        xa: Elem,
        xf: Elem,
        u: Elem,
        v: Elem,
        w: Elem,
    ) -> (Elem, Elem, Elem) {
        let ce = t.mul(xa, t.rinv(x));
        let de = t.mul(t.linv(x), xf);
        match self {
            FamilyId::HolomorphTriple => (
                t.mul(xa, t.mul(t.mul(u, t.linv(x)), x)),
                t.mul(v, xf),
                t.mul(xa, t.mul(w, xf)),
            ),
            FamilyId::LeftRatio => (
                t.mul(xa, t.ldiv(x, u)),
                v,
                t.mul(xa, t.ldiv(x, w)),
            ),
            FamilyId::RightRatio => (
                u,
                t.mul(t.rdiv(v, x), xf),
                t.mul(x, t.mul(t.rdiv(t.ldiv(x, w), x), xf)),
            ),
            FamilyId::LeftMultiplier => (t.mul(ce, u), v, t.mul(ce, w)),
            FamilyId::RightRatioDiagonal => (
                u,
                t.mul(t.rdiv(v, x), xf),
                t.mul(t.rdiv(w, x), xf),
            ),
            FamilyId::ConjDiagonal => (
                u,
                t.mul(x, t.mul(t.rdiv(t.ldiv(x, v), x), xf)),
                t.mul(x, t.mul(t.rdiv(t.ldiv(x, w), x), xf)),
            ),
            FamilyId::RightMultiplierDiagonal => (u, t.mul(v, de), t.mul(w, de)),
            FamilyId::MiddleAlpha => (t.mul(u, ce), t.ldiv(ce, v), w),
            FamilyId::MiddlePhi => (t.mul(u, de), t.ldiv(de, v), w),
        }
    }

    /// Both sides of the autotopism law at (u, v): uA.vB versus (uv)C.
    pub fn sides_resolved(
        self,
        t: &LoopTable,
        x: Elem,
        xa: Elem,
        xf: Elem,
        u: Elem,
        v: Elem,
    ) -> (Elem, Elem) {
        let w = t.mul(u, v);
        let (au, bv, cw) = self.apply_resolved(t, x, xa, xf, u, v, w);
        (t.mul(au, bv), cw)
    }

    pub fn sides(
        self,
        t: &LoopTable,
        group: &[Perm],
        c: &Coords,
        u: Elem,
        v: Elem,
    ) -> (Elem, Elem) {
        let (x, _, _, xa, _, xf) = c.resolve(group);
        self.sides_resolved(t, x, xa, xf, u, v)
    }
}

/// Element expressions used in membership claims.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElemFormula {
    /// xα.x^ρ
    AlphaTimesRho,
    /// x^λ.xφ
    LambdaTimesPhi,
    /// x^λ.xφ⁻¹
    LambdaTimesPhiInv,
    /// xα / x
    AlphaOverX,
    /// xα \ x
    XUnderAlpha,
    /// x \ xα
    AlphaUnderX,
}

impl ElemFormula {
    pub fn eval_resolved(self, t: &LoopTable, x: Elem, xa: Elem, xp: Elem, xf: Elem) -> Elem {
        match self {
            ElemFormula::AlphaTimesRho => t.mul(xa, t.rinv(x)),
            ElemFormula::LambdaTimesPhi => t.mul(t.linv(x), xp),
            ElemFormula::LambdaTimesPhiInv => t.mul(t.linv(x), xf),
            ElemFormula::AlphaOverX => t.rdiv(xa, x),
            ElemFormula::XUnderAlpha => t.ldiv(xa, x),
            ElemFormula::AlphaUnderX => t.ldiv(x, xa),
        }
    }

    pub fn eval(self, t: &LoopTable, group: &[Perm], c: &Coords) -> Elem {
        let (x, _, _, xa, xp, xf) = c.resolve(group);
        self.eval_resolved(t, x, xa, xp, xf)
    }

    pub fn describe(self) -> &'static str {
        match self {
            ElemFormula::AlphaTimesRho => "xα.x^ρ",
            ElemFormula::LambdaTimesPhi => "x^λ.xφ",
            ElemFormula::LambdaTimesPhiInv => "x^λ.xφ⁻¹",
            ElemFormula::AlphaOverX => "xα/x",
            ElemFormula::XUnderAlpha => "xα\\x",
            ElemFormula::AlphaUnderX => "x\\xα",
        }
    }
}

/// Permutation expressions used in membership claims.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PermFormula {
    /// L_x⁻¹ L_xα
    LeftRatio,
    /// R_x⁻¹ R_xφ⁻¹
    RightRatio,
    /// L_x⁻¹ R_x⁻¹ R_xφ⁻¹ L_x
    ConjRightRatio,
    LeftTranslationOf(ElemFormula),
    RightTranslationOf(ElemFormula),
}

impl PermFormula {
    /// Applies the permutation at one point, by formula.
    pub fn apply_resolved(
        self,
        t: &LoopTable,
        x: Elem,
        xa: Elem,
        xp: Elem,
        xf: Elem,
        u: Elem,
    ) -> Elem {
        match self {
            PermFormula::LeftRatio => t.mul(xa, t.ldiv(x, u)),
            PermFormula::RightRatio => t.mul(t.rdiv(u, x), xf),
            PermFormula::ConjRightRatio => t.mul(x, t.mul(t.rdiv(t.ldiv(x, u), x), xf)),
            PermFormula::LeftTranslationOf(f) => t.mul(f.eval_resolved(t, x, xa, xp, xf), u),
            PermFormula::RightTranslationOf(f) => t.mul(u, f.eval_resolved(t, x, xa, xp, xf)),
        }
    }

    pub fn describe(self) -> String {
        match self {
            PermFormula::LeftRatio => "L_x⁻¹L_xα".into(),
            PermFormula::RightRatio => "R_x⁻¹R_xφ⁻¹".into(),
            PermFormula::ConjRightRatio => "L_x⁻¹R_x⁻¹R_xφ⁻¹L_x".into(),
            PermFormula::LeftTranslationOf(f) => format!("L_[{}]", f.describe()),
            PermFormula::RightTranslationOf(f) => format!("R_[{}]", f.describe()),
        }
    }
}

/// Element subsets checked by direct definitional scan on replay.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NucleusSet {
    NLambda,
    NRho,
    NMu,
    Nucleus,
    Center,
    NLambdaAndNMu,
    NRhoAndNMu,
}

impl NucleusSet {
    pub fn name(self) -> &'static str {
        match self {
            NucleusSet::NLambda => "N_λ",
            NucleusSet::NRho => "N_ρ",
            NucleusSet::NMu => "N_μ",
            NucleusSet::Nucleus => "N",
            NucleusSet::Center => "Z",
            NucleusSet::NLambdaAndNMu => "N_λ ∩ N_μ",
            NucleusSet::NRhoAndNMu => "N_ρ ∩ N_μ",
        }
    }

    /// Membership by rescanning the defining identities with bare products.
    pub fn contains(self, t: &LoopTable, a: Elem) -> bool {
        let n = t.n();
        let in_lambda =
            || (0..n).all(|y| (0..n).all(|z| t.mul(a, t.mul(y, z)) == t.mul(t.mul(a, y), z)));
        let in_rho =
            || (0..n).all(|y| (0..n).all(|z| t.mul(t.mul(z, y), a) == t.mul(z, t.mul(y, a))));
        let in_mu =
            || (0..n).all(|y| (0..n).all(|z| t.mul(t.mul(z, a), y) == t.mul(z, t.mul(a, y))));
        let commutes = || (0..n).all(|x| t.mul(a, x) == t.mul(x, a));
        match self {
            NucleusSet::NLambda => in_lambda(),
            NucleusSet::NRho => in_rho(),
            NucleusSet::NMu => in_mu(),
            NucleusSet::Nucleus => in_lambda() && in_rho() && in_mu(),
            NucleusSet::Center => in_lambda() && in_rho() && in_mu() && commutes(),
            NucleusSet::NLambdaAndNMu => in_lambda() && in_mu(),
            NucleusSet::NRhoAndNMu => in_rho() && in_mu(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegularSetId {
    P,
    Lambda,
    Phi,
    Psi,
}

impl RegularSetId {
    pub fn name(self) -> &'static str {
        match self {
            RegularSetId::P => "P",
            RegularSetId::Lambda => "Λ",
            RegularSetId::Phi => "Φ",
            RegularSetId::Psi => "Ψ",
        }
    }

    /// Membership via the translation characterization: U lies in the set
    /// iff U is the translation by U(e) and U(e) lies in the matching
    /// nucleus; both facts rechecked pointwise from the formula.
    pub fn contains_formula(
        self,
        t: &LoopTable,
        group: &[Perm],
        c: &Coords,
        formula: PermFormula,
    ) -> bool {
        let (x, _, _, xa, xp, xf) = c.resolve(group);
        let e = t.identity();
        let a = formula.apply_resolved(t, x, xa, xp, xf, e);
        let (set, left) = match self {
            RegularSetId::P => (NucleusSet::NRho, false),
            RegularSetId::Lambda => (NucleusSet::NLambda, true),
            RegularSetId::Phi => (NucleusSet::NMu, false),
            RegularSetId::Psi => (NucleusSet::NMu, true),
        };
        if !set.contains(t, a) {
            return false;
        }
        (0..t.n()).all(|u| {
            let expect = if left { t.mul(a, u) } else { t.mul(u, a) };
            formula.apply_resolved(t, x, xa, xp, xf, u) == expect
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MembershipClaim {
    ElementIn {
        formula: ElemFormula,
        set: NucleusSet,
    },
    TranslationIn {
        formula: PermFormula,
        set: RegularSetId,
    },
}

impl MembershipClaim {
    pub fn describe(&self) -> String {
        match self {
            MembershipClaim::ElementIn { formula, set } => {
                format!("{} ∈ {}", formula.describe(), set.name())
            }
            MembershipClaim::TranslationIn { formula, set } => {
                format!("{} ∈ {}", formula.describe(), set.name())
            }
        }
    }
}

/// A concrete, replayable violation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// An element identity failed: lhs != rhs at the coordinates.
    Identity {
        id: IdentityId,
        coords: Coords,
        lhs: Elem,
        rhs: Elem,
    },
    /// A displayed triple failed the autotopism law at points (u, v).
    Autotopism {
        family: FamilyId,
        coords: Coords,
        u: Elem,
        v: Elem,
        lhs: Elem,
        rhs: Elem,
    },
    /// A claimed membership does not hold.
    Membership {
        claim: MembershipClaim,
        coords: Coords,
        element: Elem,
    },
}

impl Witness {
    pub fn coords(&self) -> &Coords {
        match self {
            Witness::Identity { coords, .. } => coords,
            Witness::Autotopism { coords, .. } => coords,
            Witness::Membership { coords, .. } => coords,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Witness::Identity { id, lhs, rhs, .. } => {
                format!("{}: lhs {} != rhs {}", id.name(), lhs + 1, rhs + 1)
            }
            Witness::Autotopism {
                family,
                u,
                v,
                lhs,
                rhs,
                ..
            } => format!(
                "{} fails at ({}, {}): {} != {}",
                family.name(),
                u + 1,
                v + 1,
                lhs + 1,
                rhs + 1
            ),
            Witness::Membership { claim, element, .. } => {
                format!("{} fails for element {}", claim.describe(), element + 1)
            }
        }
    }

    /// Recomputes the claim from the table and confirms it is violated.
    pub fn replay(&self, t: &LoopTable, group: &[Perm]) -> bool {
        match self {
            Witness::Identity {
                id,
                coords,
                lhs,
                rhs,
            } => {
                let (l, r) = id.sides(t, group, coords);
                l != r && l == *lhs && r == *rhs
            }
            Witness::Autotopism {
                family,
                coords,
                u,
                v,
                lhs,
                rhs,
            } => {
                let (l, r) = family.sides(t, group, coords, *u, *v);
                l != r && l == *lhs && r == *rhs
            }
            Witness::Membership {
                claim,
                coords,
                element,
            } => match claim {
                MembershipClaim::ElementIn { formula, set } => {
                    let a = formula.eval(t, group, coords);
                    a == *element && !set.contains(t, a)
                }
                MembershipClaim::TranslationIn { formula, set } => {
                    !set.contains_formula(t, group, coords, *formula)
                }
            },
        }
    }
}
