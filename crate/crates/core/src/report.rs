//! JSON-facing report shapes.
//!
//! All element values are 1-based here, matching the file format; the
//! conversion from internal 0-based indices happens in this module and
//! nowhere else. Struct field order is the serialization order, so equal
//! inputs produce byte-identical reports.

use serde::Serialize;

use crate::autotopy::{AutotopismTriple, PermGroup, RegularSets};
use crate::nuclei::NucleiReport;
use crate::perm::Perm;
use crate::table::ElementSet;
use crate::verify::witness::Witness;
use crate::verify::{CheckResult, TheoremReport};

pub fn one_based(set: &ElementSet) -> Vec<usize> {
    set.members().iter().map(|&m| m + 1).collect()
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PermJson {
    pub cycles: String,
    pub image: Vec<usize>,
}

impl PermJson {
    pub fn new(p: &Perm) -> PermJson {
        PermJson {
            cycles: p.cycle_notation(),
            image: p.image().iter().map(|&v| v + 1).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TripleJson {
    pub a: PermJson,
    pub b: PermJson,
    pub c: PermJson,
}

impl TripleJson {
    pub fn new(t: &AutotopismTriple) -> TripleJson {
        TripleJson {
            a: PermJson::new(&t.a),
            b: PermJson::new(&t.b),
            c: PermJson::new(&t.c),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupJson {
    pub count: usize,
    pub elements: Vec<PermJson>,
}

impl GroupJson {
    pub fn new(g: &PermGroup) -> GroupJson {
        GroupJson {
            count: g.len(),
            elements: g.elements().iter().map(PermJson::new).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NucleiJson {
    #[serde(rename = "nLambda")]
    pub n_lambda: Vec<usize>,
    #[serde(rename = "nRho")]
    pub n_rho: Vec<usize>,
    #[serde(rename = "nMu")]
    pub n_mu: Vec<usize>,
    pub nucleus: Vec<usize>,
    pub centrum: Vec<usize>,
    pub center: Vec<usize>,
}

impl NucleiJson {
    pub fn new(r: &NucleiReport) -> NucleiJson {
        NucleiJson {
            n_lambda: one_based(&r.n_lambda),
            n_rho: one_based(&r.n_rho),
            n_mu: one_based(&r.n_mu),
            nucleus: one_based(&r.nucleus),
            centrum: one_based(&r.centrum),
            center: one_based(&r.center),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RegularSetsJson {
    pub p: GroupJson,
    pub lambda: GroupJson,
    pub phi: GroupJson,
    pub psi: GroupJson,
    /// (U, adjoint of U) pairs in cycle notation.
    pub adjoints: Vec<[String; 2]>,
}

impl RegularSetsJson {
    pub fn new(r: &RegularSets) -> RegularSetsJson {
        RegularSetsJson {
            p: GroupJson::new(&r.p_set),
            lambda: GroupJson::new(&r.lambda_set),
            phi: GroupJson::new(&r.phi_set),
            psi: GroupJson::new(&r.psi_set),
            adjoints: r
                .adjoint_pairs()
                .iter()
                .map(|(u, v)| [u.cycle_notation(), v.cycle_notation()])
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CoordsJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessJson {
    pub kind: String,
    pub claim: String,
    pub coords: CoordsJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element: Option<usize>,
    pub detail: String,
}

impl WitnessJson {
    pub fn new(w: &Witness) -> WitnessJson {
        let c = w.coords();
        let coords = CoordsJson {
            x: c.x.map(|v| v + 1),
            y: c.y.map(|v| v + 1),
            z: c.z.map(|v| v + 1),
            alpha: c.alpha.map(|v| v + 1),
            phi: c.phi.map(|v| v + 1),
        };
        match w {
            Witness::Identity { id, lhs, rhs, .. } => WitnessJson {
                kind: "identity".to_string(),
                claim: id.name().to_string(),
                coords,
                u: None,
                v: None,
                lhs: Some(lhs + 1),
                rhs: Some(rhs + 1),
                element: None,
                detail: w.describe(),
            },
            Witness::Autotopism {
                family,
                u,
                v,
                lhs,
                rhs,
                ..
            } => WitnessJson {
                kind: "autotopism".to_string(),
                claim: family.name().to_string(),
                coords,
                u: Some(u + 1),
                v: Some(v + 1),
                lhs: Some(lhs + 1),
                rhs: Some(rhs + 1),
                element: None,
                detail: w.describe(),
            },
            Witness::Membership { claim, element, .. } => WitnessJson {
                kind: "membership".to_string(),
                claim: claim.describe(),
                coords,
                u: None,
                v: None,
                lhs: None,
                rhs: None,
                element: Some(element + 1),
                detail: w.describe(),
            },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckJson {
    pub name: String,
    pub status: String,
    pub scanned: u64,
    #[serde(skip_serializing_if = "Option::is_none", rename = "skipReason")]
    pub skip_reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckJson {
    pub fn new(c: &CheckResult) -> CheckJson {
        CheckJson {
            name: c.name.clone(),
            status: c.status.as_str().to_string(),
            scanned: c.scanned,
            skip_reason: c.skip_reason.clone(),
            witness: c.witness.as_ref().map(WitnessJson::new),
            notes: c.notes.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictJson {
    pub check: String,
    pub status: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReportJson {
    pub label: String,
    pub order: usize,
    #[serde(rename = "groupOrder")]
    pub group_order: usize,
    pub group: Vec<PermJson>,
    pub verdicts: Vec<VerdictJson>,
    #[serde(rename = "allHold")]
    pub all_hold: bool,
    #[serde(rename = "consistencyErrors", skip_serializing_if = "Vec::is_empty")]
    pub consistency_errors: Vec<String>,
    pub checks: Vec<CheckJson>,
}

impl TheoremReportJson {
    pub fn new(r: &TheoremReport) -> TheoremReportJson {
        TheoremReportJson {
            label: r.label.clone(),
            order: r.order,
            group_order: r.group_order,
            group: r.group_elements.iter().map(PermJson::new).collect(),
            verdicts: r
                .verdicts
                .iter()
                .map(|(check, status)| VerdictJson {
                    check: check.clone(),
                    status: status.as_str().to_string(),
                })
                .collect(),
            all_hold: r.all_hold(),
            consistency_errors: r.consistency_errors.clone(),
            checks: r.checks.iter().map(CheckJson::new).collect(),
        }
    }
}

/// Stable pretty-printed JSON for a theorem report.
pub fn theorem_report_to_json(r: &TheoremReport) -> String {
    serde_json::to_string_pretty(&TheoremReportJson::new(r)).expect("report serialization")
}
