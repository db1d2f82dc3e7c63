//! Autotopisms, automorphisms, regular bijections, and the translation
//! correspondences between regular-bijection groups and nuclei.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::exec;
use crate::nuclei::NucleiReport;
use crate::perm::{all_perms, Perm};
use crate::table::{ElementSet, LoopTable};
use crate::{Elem, Limits};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum AutotopyError {
    #[error("triple acts on {triple_n} points but the loop has order {loop_n}")]
    PointCountMismatch { triple_n: usize, loop_n: usize },
    #[error("order {order} exceeds the search bound {bound}")]
    SearchBoundExceeded { order: usize, bound: usize },
}

/// An ordered triple (A, B, C) that is an autotopism when
/// xA * yB = (x * y)C holds for all x, y.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AutotopismTriple {
    pub a: Perm,
    pub b: Perm,
    pub c: Perm,
}

impl AutotopismTriple {
    pub fn new(a: Perm, b: Perm, c: Perm) -> AutotopismTriple {
        debug_assert!(a.n() == b.n() && b.n() == c.n());
        AutotopismTriple { a, b, c }
    }

    pub fn identity(n: usize) -> AutotopismTriple {
        let i = Perm::identity(n);
        AutotopismTriple::new(i.clone(), i.clone(), i)
    }

    pub fn diagonal(p: &Perm) -> AutotopismTriple {
        AutotopismTriple::new(p.clone(), p.clone(), p.clone())
    }

    /// Componentwise postfix composition.
    pub fn then(&self, other: &AutotopismTriple) -> AutotopismTriple {
        AutotopismTriple::new(
            self.a.then(&other.a),
            self.b.then(&other.b),
            self.c.then(&other.c),
        )
    }

    pub fn invert(&self) -> AutotopismTriple {
        AutotopismTriple::new(self.a.invert(), self.b.invert(), self.c.invert())
    }
}

impl fmt::Display for AutotopismTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// First point pair violating xA * yB = (x * y)C, scanning (x, y) in order.
pub fn autotopism_violation(
    t: &LoopTable,
    triple: &AutotopismTriple,
) -> Result<Option<(Elem, Elem)>, AutotopyError> {
    if triple.a.n() != t.n() {
        return Err(AutotopyError::PointCountMismatch {
            triple_n: triple.a.n(),
            loop_n: t.n(),
        });
    }
    for x in 0..t.n() {
        for y in 0..t.n() {
            if t.mul(triple.a.apply(x), triple.b.apply(y)) != triple.c.apply(t.mul(x, y)) {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}

pub fn is_autotopism(t: &LoopTable, triple: &AutotopismTriple) -> Result<bool, AutotopyError> {
    Ok(autotopism_violation(t, triple)?.is_none())
}

fn triples_for_first_component(t: &LoopTable, a: &Perm) -> Vec<AutotopismTriple> {
    let n = t.n();
    let e = t.identity();
    let inv_l_ea = t.left_translation(a.apply(e)).invert();
    let mut out = Vec::new();
    for b0 in 0..n {
        // With y = e the defining identity forces C = A R_{eB}; with x = e it
        // forces B = C L_{eA}^{-1}. Enumerating (A, eB) therefore covers
        // every autotopism; candidates are then checked outright.
        let c = a.then(&t.right_translation(b0));
        let b = c.then(&inv_l_ea);
        let triple = AutotopismTriple::new(a.clone(), b, c);
        if autotopism_violation(t, &triple).unwrap().is_none() {
            out.push(triple);
        }
    }
    out
}

fn assert_group_of_triples(t: &LoopTable, triples: &[AutotopismTriple]) {
    let lookup: BTreeSet<&AutotopismTriple> = triples.iter().collect();
    for p in triples {
        assert!(
            lookup.contains(&p.invert()),
            "autotopism set is not closed under inversion"
        );
        for q in triples {
            assert!(
                lookup.contains(&p.then(q)),
                "autotopism set is not closed under composition"
            );
        }
    }
    debug_assert!(triples
        .iter()
        .all(|p| is_autotopism(t, p).unwrap()));
}

/// The full autotopism group, via the (A, eB) determination search:
/// n! * n candidates instead of (n!)^3 raw triples.
pub fn autotopism_group(
    t: &LoopTable,
    limits: &Limits,
) -> Result<Vec<AutotopismTriple>, AutotopyError> {
    if t.n() > limits.aut_search_max_order {
        return Err(AutotopyError::SearchBoundExceeded {
            order: t.n(),
            bound: limits.aut_search_max_order,
        });
    }
    let mut triples = exec::flat_map_vec(all_perms(t.n()), |a| triples_for_first_component(t, &a));
    triples.sort();
    assert_group_of_triples(t, &triples);
    Ok(triples)
}

/// Single-threaded variant of [`autotopism_group`]; the benchmark baseline.
pub fn autotopism_group_seq(
    t: &LoopTable,
    limits: &Limits,
) -> Result<Vec<AutotopismTriple>, AutotopyError> {
    if t.n() > limits.aut_search_max_order {
        return Err(AutotopyError::SearchBoundExceeded {
            order: t.n(),
            bound: limits.aut_search_max_order,
        });
    }
    let mut triples =
        exec::flat_map_vec_seq(all_perms(t.n()), |a| triples_for_first_component(t, &a));
    triples.sort();
    assert_group_of_triples(t, &triples);
    Ok(triples)
}

const BRUTE_MAX_ORDER: usize = 6;

/// Independent oracle: scans all (A, B) pairs in Sym(n) x Sym(n), solving C
/// from the x = e specialization, then filtering by the definition.
pub fn autotopism_group_bruteforce(t: &LoopTable) -> Result<Vec<AutotopismTriple>, AutotopyError> {
    if t.n() > BRUTE_MAX_ORDER {
        return Err(AutotopyError::SearchBoundExceeded {
            order: t.n(),
            bound: BRUTE_MAX_ORDER,
        });
    }
    let perms = all_perms(t.n());
    let e = t.identity();
    let mut triples = exec::flat_map_vec(perms.clone(), |a| {
        let l_ea = t.left_translation(a.apply(e));
        let mut found = Vec::new();
        for b in &perms {
            // x = e: eA * yB = yC, so C = B L_{eA}.
            let c = b.then(&l_ea);
            let triple = AutotopismTriple::new(a.clone(), b.clone(), c);
            if autotopism_violation(t, &triple).unwrap().is_none() {
                found.push(triple);
            }
        }
        found
    });
    triples.sort();
    Ok(triples)
}

/// A finite set of permutations closed under composition and inversion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    elements: Vec<Perm>,
    generators: Option<Vec<Perm>>,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("closure exceeded the cap of {cap} elements")]
    ClosureBoundExceeded { cap: usize },
    #[error("element set is not closed under composition and inversion")]
    NotClosed,
}

impl PermGroup {
    pub fn trivial(n: usize) -> PermGroup {
        PermGroup {
            elements: vec![Perm::identity(n)],
            generators: None,
        }
    }

    /// Sorts, dedups, and checks the group axioms on the given elements.
    pub fn from_elements(mut elements: Vec<Perm>) -> Result<PermGroup, GroupError> {
        elements.sort();
        elements.dedup();
        if elements.is_empty() {
            return Err(GroupError::NotClosed);
        }
        let n = elements[0].n();
        if !elements.iter().any(Perm::is_identity) {
            return Err(GroupError::NotClosed);
        }
        let contains = |p: &Perm| elements.binary_search(p).is_ok();
        for p in &elements {
            if p.n() != n || !contains(&p.invert()) {
                return Err(GroupError::NotClosed);
            }
            for q in &elements {
                if !contains(&p.then(q)) {
                    return Err(GroupError::NotClosed);
                }
            }
        }
        Ok(PermGroup {
            elements,
            generators: None,
        })
    }

    /// Closure of the generators under composition and inversion.
    pub fn closure(n: usize, generators: &[Perm], cap: usize) -> Result<PermGroup, GroupError> {
        let mut elements: BTreeSet<Perm> = BTreeSet::new();
        elements.insert(Perm::identity(n));
        let mut frontier: Vec<Perm> = vec![Perm::identity(n)];
        for g in generators {
            if elements.insert(g.clone()) {
                frontier.push(g.clone());
            }
        }
        while let Some(p) = frontier.pop() {
            let mut grow = |q: Perm| -> Result<Option<Perm>, GroupError> {
                if elements.contains(&q) {
                    return Ok(None);
                }
                if elements.len() >= cap {
                    return Err(GroupError::ClosureBoundExceeded { cap });
                }
                elements.insert(q.clone());
                Ok(Some(q))
            };
            if let Some(q) = grow(p.invert())? {
                frontier.push(q);
            }
            for g in generators {
                if let Some(q) = grow(p.then(g))? {
                    frontier.push(q);
                }
                if let Some(q) = grow(g.then(&p))? {
                    frontier.push(q);
                }
            }
        }
        Ok(PermGroup {
            elements: elements.into_iter().collect(),
            generators: Some(generators.to_vec()),
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// Elements in canonical order: the identity sorts first.
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn generators(&self) -> Option<&[Perm]> {
        self.generators.as_deref()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn point_count(&self) -> usize {
        self.elements[0].n()
    }

    /// Every subgroup, found by repeatedly extending known subgroups by one
    /// element and closing; deterministic order (size, then elements).
    pub fn subgroups(&self) -> Vec<PermGroup> {
        let n = self.point_count();
        let mut seen: BTreeSet<Vec<Perm>> = BTreeSet::new();
        let trivial = vec![Perm::identity(n)];
        seen.insert(trivial.clone());
        let mut frontier = vec![trivial];
        while let Some(h) = frontier.pop() {
            for g in &self.elements {
                if h.binary_search(g).is_ok() {
                    continue;
                }
                let mut gens: Vec<Perm> = h.clone();
                gens.push(g.clone());
                let closed = PermGroup::closure(n, &gens, self.elements.len())
                    .expect("subgroup closure stays within the parent group");
                let key = closed.elements.clone();
                if seen.insert(key.clone()) {
                    frontier.push(key);
                }
            }
        }
        let mut out: Vec<PermGroup> = seen
            .into_iter()
            .map(|elements| PermGroup {
                elements,
                generators: None,
            })
            .collect();
        out.sort_by(|a, b| (a.len(), &a.elements).cmp(&(b.len(), &b.elements)));
        out
    }
}

/// All automorphisms: permutations fixing the identity that preserve
/// products. Backtracking assigns images in point order and propagates the
/// product of every already-placed pair.
pub fn automorphism_group(t: &LoopTable, limits: &Limits) -> Result<PermGroup, AutotopyError> {
    if t.n() > limits.aut_search_max_order {
        return Err(AutotopyError::SearchBoundExceeded {
            order: t.n(),
            bound: limits.aut_search_max_order,
        });
    }
    let n = t.n();
    let mut f: Vec<Option<Elem>> = vec![None; n];
    let mut used = vec![false; n];
    f[t.identity()] = Some(t.identity());
    used[t.identity()] = true;
    let mut found = Vec::new();
    collect_automorphisms(t, &mut f, &mut used, &mut found);
    found.sort();
    Ok(PermGroup::from_elements(found).expect("automorphisms form a group"))
}

fn collect_automorphisms(
    t: &LoopTable,
    f: &mut Vec<Option<Elem>>,
    used: &mut Vec<bool>,
    found: &mut Vec<Perm>,
) {
    let n = t.n();
    let next = match (0..n).find(|&x| f[x].is_none()) {
        Some(x) => x,
        None => {
            let image: Vec<Elem> = f.iter().map(|v| v.unwrap()).collect();
            found.push(Perm::from_image(image).unwrap());
            return;
        }
    };
    for cand in 0..n {
        if used[cand] {
            continue;
        }
        let mut trail = Vec::new();
        if propagate_endo(t, f, used, &mut trail, next, cand) {
            collect_automorphisms(t, f, used, found);
        }
        for x in trail {
            let v = f[x].take().unwrap();
            used[v] = false;
        }
    }
}

fn propagate_endo(
    t: &LoopTable,
    f: &mut [Option<Elem>],
    used: &mut [bool],
    trail: &mut Vec<Elem>,
    x: Elem,
    v: Elem,
) -> bool {
    match f[x] {
        Some(old) => return old == v,
        None => {
            if used[v] {
                return false;
            }
            f[x] = Some(v);
            used[v] = true;
            trail.push(x);
        }
    }
    let n = t.n();
    for y in 0..n {
        if let Some(fy) = f[y] {
            let fx = f[x].unwrap();
            if !propagate_endo(t, f, used, trail, t.mul(x, y), t.mul(fx, fy)) {
                return false;
            }
            if !propagate_endo(t, f, used, trail, t.mul(y, x), t.mul(fy, fx)) {
                return false;
            }
        }
    }
    true
}

/// The set of autotopic bijections: first components of the autotopism group.
pub fn autotopic_bijections(triples: &[AutotopismTriple]) -> PermGroup {
    let firsts: Vec<Perm> = triples.iter().map(|t| t.a.clone()).collect();
    PermGroup::from_elements(firsts).expect("first components of autotopisms form a group")
}

/// The four regular-bijection groups with the adjoint correspondence.
///
/// A bijection U is ρ-regular if (I, U, U) is an autotopism, λ-regular if
/// (U, I, U) is, and μ-regular if (U, U'^-1, I) is for some adjoint U'.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularSets {
    pub p_set: PermGroup,
    pub lambda_set: PermGroup,
    pub phi_set: PermGroup,
    pub psi_set: PermGroup,
    /// Pairs (U, U') with (U, U'^-1, I) verified, sorted by U.
    adjoint_pairs: Vec<(Perm, Perm)>,
}

impl RegularSets {
    pub fn adjoint_of(&self, u: &Perm) -> Option<&Perm> {
        self.adjoint_pairs
            .binary_search_by(|(k, _)| k.cmp(u))
            .ok()
            .map(|i| &self.adjoint_pairs[i].1)
    }

    pub fn adjoint_pairs(&self) -> &[(Perm, Perm)] {
        &self.adjoint_pairs
    }

    fn assert_contracts(&self, t: &LoopTable) {
        let id = Perm::identity(t.n());
        for u in self.p_set.elements() {
            let triple = AutotopismTriple::new(id.clone(), u.clone(), u.clone());
            assert!(is_autotopism(t, &triple).unwrap(), "p_set member fails (I, U, U)");
        }
        for u in self.lambda_set.elements() {
            let triple = AutotopismTriple::new(u.clone(), id.clone(), u.clone());
            assert!(is_autotopism(t, &triple).unwrap(), "lambda_set member fails (U, I, U)");
        }
        assert_eq!(self.adjoint_pairs.len(), self.phi_set.len());
        assert_eq!(self.phi_set.len(), self.psi_set.len());
        let mut images: Vec<&Perm> = self.adjoint_pairs.iter().map(|(_, v)| v).collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), self.psi_set.len(), "adjoint map is not a bijection");
        for (u, u_adj) in &self.adjoint_pairs {
            assert!(self.phi_set.contains(u));
            assert!(self.psi_set.contains(u_adj));
            let triple = AutotopismTriple::new(u.clone(), u_adj.invert(), id.clone());
            assert!(is_autotopism(t, &triple).unwrap(), "adjoint pair fails (U, U'^-1, I)");
        }
    }
}

/// Regular sets by nucleus parameterization: P = {R_a : a in N_ρ},
/// Λ = {L_b : b in N_λ}, Φ = {R_c : c in N_μ} with adjoint L_c.
/// Every produced triple is re-verified against the autotopism definition.
pub fn regular_sets(t: &LoopTable, nuclei: &NucleiReport) -> RegularSets {
    let build = |members: &ElementSet, f: &dyn Fn(Elem) -> Perm| -> Vec<Perm> {
        members.members().iter().map(|&a| f(a)).collect()
    };
    let p = build(&nuclei.n_rho, &|a| t.right_translation(a));
    let lambda = build(&nuclei.n_lambda, &|b| t.left_translation(b));
    let mut adjoint_pairs: Vec<(Perm, Perm)> = nuclei
        .n_mu
        .members()
        .iter()
        .map(|&c| (t.right_translation(c), t.left_translation(c)))
        .collect();
    adjoint_pairs.sort();
    let phi: Vec<Perm> = adjoint_pairs.iter().map(|(u, _)| u.clone()).collect();
    let psi: Vec<Perm> = adjoint_pairs.iter().map(|(_, v)| v.clone()).collect();
    let sets = RegularSets {
        p_set: PermGroup::from_elements(p).expect("ρ-regular maps form a group"),
        lambda_set: PermGroup::from_elements(lambda).expect("λ-regular maps form a group"),
        phi_set: PermGroup::from_elements(phi).expect("μ-regular maps form a group"),
        psi_set: PermGroup::from_elements(psi).expect("adjoint maps form a group"),
        adjoint_pairs,
    };
    sets.assert_contracts(t);
    sets
}

/// Independent oracle: the same four groups from a raw scan over Sym(n)
/// (and Sym(n) x Sym(n) for the adjoint pairs).
pub fn regular_sets_bruteforce(t: &LoopTable) -> Result<RegularSets, AutotopyError> {
    if t.n() > BRUTE_MAX_ORDER {
        return Err(AutotopyError::SearchBoundExceeded {
            order: t.n(),
            bound: BRUTE_MAX_ORDER,
        });
    }
    let perms = all_perms(t.n());
    let id = Perm::identity(t.n());
    let mut p = Vec::new();
    let mut lambda = Vec::new();
    for u in &perms {
        if is_autotopism(t, &AutotopismTriple::new(id.clone(), u.clone(), u.clone())).unwrap() {
            p.push(u.clone());
        }
        if is_autotopism(t, &AutotopismTriple::new(u.clone(), id.clone(), u.clone())).unwrap() {
            lambda.push(u.clone());
        }
    }
    let mut adjoint_pairs: Vec<(Perm, Perm)> = Vec::new();
    for u in &perms {
        for w in &perms {
            let triple = AutotopismTriple::new(u.clone(), w.clone(), id.clone());
            if is_autotopism(t, &triple).unwrap() {
                adjoint_pairs.push((u.clone(), w.invert()));
            }
        }
    }
    adjoint_pairs.sort();
    let phi: Vec<Perm> = adjoint_pairs.iter().map(|(u, _)| u.clone()).collect();
    let psi: Vec<Perm> = adjoint_pairs.iter().map(|(_, v)| v.clone()).collect();
    let sets = RegularSets {
        p_set: PermGroup::from_elements(p).expect("ρ-regular maps form a group"),
        lambda_set: PermGroup::from_elements(lambda).expect("λ-regular maps form a group"),
        phi_set: PermGroup::from_elements(phi).expect("μ-regular maps form a group"),
        psi_set: PermGroup::from_elements(psi).expect("adjoint maps form a group"),
        adjoint_pairs,
    };
    sets.assert_contracts(t);
    Ok(sets)
}

/// Which of the five translation correspondences to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapName {
    /// ψ: P -> N_ρ, U -> eU
    Psi,
    /// δ: Λ -> N_λ, U -> eU
    Delta,
    /// φ: Φ -> Ψ, U -> its adjoint U'
    Phi,
    /// σ: Φ -> N_μ, U -> eU
    Sigma,
    /// β: Ψ -> N_μ, U' -> eU'
    Beta,
}

impl MapName {
    pub fn as_str(self) -> &'static str {
        match self {
            MapName::Psi => "psi",
            MapName::Delta => "delta",
            MapName::Phi => "phi",
            MapName::Sigma => "sigma",
            MapName::Beta => "beta",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoImage {
    Element(Elem),
    Mapping(Perm),
}

/// The graph of one correspondence, verified bijective with its structure law.
#[derive(Clone, Debug)]
pub struct NucleusIsoWitness {
    pub map_name: MapName,
    pub graph: Vec<(Perm, IsoImage)>,
}

impl NucleusIsoWitness {
    pub fn image_of(&self, u: &Perm) -> Option<&IsoImage> {
        self.graph
            .binary_search_by(|(k, _)| k.cmp(u))
            .ok()
            .map(|i| &self.graph[i].1)
    }
}

/// Either a table bug or a genuine counterexample; never ignored silently.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("correspondence {map} violated: {detail}")]
pub struct IsoViolation {
    pub map: &'static str,
    pub detail: String,
}

/// Evaluates the named correspondence pointwise, checking that it is a
/// bijection onto the matching nucleus (or onto Ψ for φ) and that it carries
/// composition to the loop product.
///
/// Under postfix composition, right translations compose covariantly and
/// left translations contravariantly, so ψ and σ satisfy
/// `map(U then V) = map(U) * map(V)` while δ and β satisfy
/// `map(U then V) = map(V) * map(U)`, and φ reverses composition order.
pub fn nucleus_iso(
    t: &LoopTable,
    map_name: MapName,
    reg: &RegularSets,
    nuclei: &NucleiReport,
) -> Result<NucleusIsoWitness, IsoViolation> {
    let e = t.identity();
    let (domain, target): (&PermGroup, Option<&ElementSet>) = match map_name {
        MapName::Psi => (&reg.p_set, Some(&nuclei.n_rho)),
        MapName::Delta => (&reg.lambda_set, Some(&nuclei.n_lambda)),
        MapName::Sigma => (&reg.phi_set, Some(&nuclei.n_mu)),
        MapName::Beta => (&reg.psi_set, Some(&nuclei.n_mu)),
        MapName::Phi => (&reg.phi_set, None),
    };
    let fail = |detail: String| IsoViolation {
        map: map_name.as_str(),
        detail,
    };

    let graph: Vec<(Perm, IsoImage)> = domain
        .elements()
        .iter()
        .map(|u| {
            let image = match map_name {
                MapName::Phi => IsoImage::Mapping(
                    reg.adjoint_of(u)
                        .expect("every μ-regular map has an adjoint")
                        .clone(),
                ),
                _ => IsoImage::Element(u.apply(e)),
            };
            (u.clone(), image)
        })
        .collect();

    // Injectivity and image coverage.
    let mut images = graph.iter().map(|(_, v)| v.clone()).collect::<Vec<_>>();
    match target {
        Some(set) => {
            let mut elems: Vec<Elem> = images
                .iter()
                .map(|v| match v {
                    IsoImage::Element(x) => *x,
                    IsoImage::Mapping(_) => unreachable!(),
                })
                .collect();
            elems.sort_unstable();
            elems.dedup();
            if elems.len() != graph.len() {
                return Err(fail("not injective".into()));
            }
            if elems != set.members() {
                return Err(fail(format!(
                    "image {:?} differs from the target nucleus {:?}",
                    elems,
                    set.members()
                )));
            }
        }
        None => {
            images.sort_by(|a, b| match (a, b) {
                (IsoImage::Mapping(p), IsoImage::Mapping(q)) => p.cmp(q),
                _ => unreachable!(),
            });
            images.dedup();
            if images.len() != graph.len() || images.len() != reg.psi_set.len() {
                return Err(fail("adjoint correspondence is not a bijection onto Ψ".into()));
            }
        }
    }

    // Structure law, checked on every pair.
    let witness = NucleusIsoWitness {
        map_name,
        graph,
    };
    for (u, iu) in &witness.graph {
        for (v, iv) in &witness.graph {
            let uv = u.then(v);
            let iuv = witness
                .image_of(&uv)
                .ok_or_else(|| fail(format!("domain not closed at {u} then {v}")))?;
            let ok = match (iu, iv, iuv) {
                (IsoImage::Element(a), IsoImage::Element(b), IsoImage::Element(ab)) => {
                    match map_name {
                        MapName::Psi | MapName::Sigma => *ab == t.mul(*a, *b),
                        MapName::Delta | MapName::Beta => *ab == t.mul(*b, *a),
                        MapName::Phi => unreachable!(),
                    }
                }
                (IsoImage::Mapping(p), IsoImage::Mapping(q), IsoImage::Mapping(pq)) => {
                    *pq == q.then(p)
                }
                _ => false,
            };
            if !ok {
                return Err(fail(format!("structure law fails at pair ({u}, {v})")));
            }
        }
    }
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::enumerate::reduced_loops;
    use crate::nuclei::nuclei_report;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn identity_triple_is_autotopism() {
        for t in reduced_loops(5).iter().take(6) {
            assert!(is_autotopism(t, &AutotopismTriple::identity(5)).unwrap());
        }
    }

    #[test]
    fn translation_triple_on_abelian_group() {
        let z4 = catalog::cyclic(4);
        let r1 = z4.right_translation(1);
        let triple = AutotopismTriple::new(r1.clone(), Perm::identity(4), r1);
        assert!(is_autotopism(&z4, &triple).unwrap());
    }

    #[test]
    fn point_count_mismatch_is_an_error() {
        let z4 = catalog::cyclic(4);
        let t = AutotopismTriple::identity(3);
        assert_eq!(
            is_autotopism(&z4, &t),
            Err(AutotopyError::PointCountMismatch {
                triple_n: 3,
                loop_n: 4
            })
        );
    }

    #[test]
    fn corrupted_triple_fails_with_first_violation() {
        let s3 = catalog::symmetric_3();
        let mut triple = AutotopismTriple::identity(6);
        triple.c = s3.right_translation(1);
        let (x, y) = autotopism_violation(&s3, &triple).unwrap().unwrap();
        assert_ne!(
            s3.mul(triple.a.apply(x), triple.b.apply(y)),
            triple.c.apply(s3.mul(x, y))
        );
    }

    #[test]
    fn order_one_autotopism_group_is_trivial() {
        let t = LoopTable::validate(&[vec![0]]).unwrap();
        let aut = autotopism_group(&t, &limits()).unwrap();
        assert_eq!(aut, vec![AutotopismTriple::identity(1)]);
    }

    #[test]
    fn determination_search_matches_bruteforce_on_z3() {
        let z3 = catalog::cyclic(3);
        let fast = autotopism_group(&z3, &limits()).unwrap();
        let brute = autotopism_group_bruteforce(&z3).unwrap();
        assert_eq!(fast, brute);
        // |AUT(Z_3)| = 9 * |AUM| = 18
        assert_eq!(fast.len(), 18);
    }

    #[test]
    fn search_bound_is_enforced() {
        let mut l = limits();
        l.aut_search_max_order = 3;
        let z4 = catalog::cyclic(4);
        assert!(matches!(
            autotopism_group(&z4, &l),
            Err(AutotopyError::SearchBoundExceeded { order: 4, bound: 3 })
        ));
    }

    #[test]
    fn automorphism_groups_of_cyclic_groups() {
        assert_eq!(automorphism_group(&catalog::cyclic(3), &limits()).unwrap().len(), 2);
        assert_eq!(automorphism_group(&catalog::cyclic(5), &limits()).unwrap().len(), 4);
        assert_eq!(automorphism_group(&catalog::klein(), &limits()).unwrap().len(), 6);
    }

    #[test]
    fn diagonal_of_aut_is_the_automorphism_group() {
        let t = reduced_loops(5)
            .into_iter()
            .find(|t| !t.is_associative())
            .unwrap();
        let aut = autotopism_group(&t, &limits()).unwrap();
        let diagonal: Vec<Perm> = aut
            .iter()
            .filter(|tr| tr.a == tr.b && tr.b == tr.c)
            .map(|tr| tr.a.clone())
            .collect();
        let aum = automorphism_group(&t, &limits()).unwrap();
        assert_eq!(diagonal, aum.elements());
    }

    #[test]
    fn aut_order_divisible_by_aum_order() {
        for t in reduced_loops(5).iter().take(10) {
            let aut = autotopism_group(t, &limits()).unwrap().len();
            let aum = automorphism_group(t, &limits()).unwrap().len();
            assert_eq!(aut % aum, 0, "|AUT| = {aut}, |AUM| = {aum}");
        }
    }

    #[test]
    fn autotopic_bijections_form_a_group() {
        let z4 = catalog::cyclic(4);
        let aut = autotopism_group(&z4, &limits()).unwrap();
        let sigma = autotopic_bijections(&aut);
        assert!(sigma.contains(&Perm::identity(4)));
    }

    #[test]
    fn closure_examples() {
        let z3 = catalog::cyclic(3);
        let inv = Perm::from_image(vec![0, 2, 1]).unwrap();
        assert!(z3.is_automorphism(&inv));
        let g = PermGroup::closure(3, &[inv], 100).unwrap();
        assert_eq!(g.len(), 2);
        let empty = PermGroup::closure(4, &[], 100).unwrap();
        assert!(empty.is_trivial());
        let cap_hit = PermGroup::closure(5, &all_perms(5), 10);
        assert_eq!(cap_hit, Err(GroupError::ClosureBoundExceeded { cap: 10 }));
    }

    #[test]
    fn subgroup_lattice_of_s3() {
        let aum = automorphism_group(&catalog::klein(), &limits()).unwrap();
        // AUM(V_4) is S_3: trivial, three C_2, one C_3, and itself.
        let subs = aum.subgroups();
        assert_eq!(subs.len(), 6);
        let sizes: Vec<usize> = subs.iter().map(PermGroup::len).collect();
        assert_eq!(sizes, vec![1, 2, 2, 2, 3, 6]);
    }

    #[test]
    fn regular_sets_of_cyclic_group() {
        let z4 = catalog::cyclic(4);
        let reg = regular_sets(&z4, &nuclei_report(&z4));
        assert_eq!(reg.p_set.len(), 4);
        let expected: Vec<Perm> = {
            let mut v: Vec<Perm> = (0..4).map(|a| z4.right_translation(a)).collect();
            v.sort();
            v
        };
        assert_eq!(reg.p_set.elements(), &expected);
    }

    #[test]
    fn regular_sets_of_order_one() {
        let t = LoopTable::validate(&[vec![0]]).unwrap();
        let reg = regular_sets(&t, &nuclei_report(&t));
        for set in [&reg.p_set, &reg.lambda_set, &reg.phi_set, &reg.psi_set] {
            assert!(set.is_trivial());
        }
    }

    #[test]
    fn nucleus_route_matches_bruteforce_on_samples() {
        let mut tables = vec![catalog::cyclic(4), catalog::symmetric_3()];
        tables.push(reduced_loops(5).into_iter().find(|t| !t.is_associative()).unwrap());
        for t in tables {
            let fast = regular_sets(&t, &nuclei_report(&t));
            let brute = regular_sets_bruteforce(&t).unwrap();
            assert_eq!(fast, brute);
        }
    }

    #[test]
    fn nucleus_iso_psi_on_z4() {
        let z4 = catalog::cyclic(4);
        let nuc = nuclei_report(&z4);
        let reg = regular_sets(&z4, &nuc);
        let w = nucleus_iso(&z4, MapName::Psi, &reg, &nuc).unwrap();
        assert_eq!(w.graph.len(), 4);
        for (u, img) in &w.graph {
            assert_eq!(img, &IsoImage::Element(u.apply(0)));
        }
        // δ maps the identity translation to the identity element.
        let wd = nucleus_iso(&z4, MapName::Delta, &reg, &nuc).unwrap();
        assert_eq!(
            wd.image_of(&Perm::identity(4)),
            Some(&IsoImage::Element(0))
        );
    }

    #[test]
    fn nucleus_iso_sigma_on_nonassociative_loop() {
        let t = reduced_loops(5)
            .into_iter()
            .find(|t| !t.is_associative())
            .unwrap();
        let nuc = nuclei_report(&t);
        let reg = regular_sets(&t, &nuc);
        for name in [MapName::Psi, MapName::Delta, MapName::Sigma, MapName::Beta, MapName::Phi] {
            nucleus_iso(&t, name, &reg, &nuc).unwrap();
        }
    }
}
