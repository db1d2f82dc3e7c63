//! Finite loop engine.
//!
//! A loop is a quasigroup with a two-sided identity: an n x n Cayley table in
//! which every row and column is a permutation of the elements. This crate
//! provides the table machinery (translations, divisions, one-sided inverses),
//! nucleus and center computation, autotopism / automorphism / regular-bijection
//! group search, A-holomorph construction, executable checks for the Osborn
//! identity and its holomorph criteria, and an exhaustive enumerator for
//! normalized loops of small order.
//!
//! All permutation composition in this crate is written postfix: `p.then(q)`
//! applies `p` first, then `q`, matching the convention `x L_a R_b` = "apply
//! `L_a`, then `R_b`". Every triple builder and regular-set construction uses
//! this one convention.

pub mod autotopy;
pub mod catalog;
pub mod enumerate;
mod exec;
pub mod fileformat;
pub mod holomorph;
pub mod nuclei;
pub mod perm;
pub mod report;
pub mod table;
pub mod verify;

pub use autotopy::{AutotopismTriple, PermGroup, RegularSets};
pub use holomorph::HolomorphLoop;
pub use nuclei::NucleiReport;
pub use perm::Perm;
pub use table::{ElementSet, LoopTable};
pub use verify::{CheckResult, CheckStatus, TheoremReport};

/// An element of a loop, a dense index in `0..n`.
pub type Elem = usize;

/// Bounds for the search-shaped operations.
///
/// Exhaustive autotopism search is factorial in the loop order and the cubic
/// identity scans are cubic in the holomorph order, so both are capped.
#[derive(Clone, Debug)]
pub struct Limits {
    /// Largest loop order accepted by the full autotopism search.
    pub aut_search_max_order: usize,
    /// Largest group produced by `subgroup_closure` before giving up.
    pub closure_cap: usize,
    /// Largest holomorph order |A|*n accepted by the cubic verifier scans.
    pub holomorph_budget: usize,
    /// Largest order for a full enumeration sweep.
    pub enum_full_max_order: usize,
    /// Largest order for a limited (capped) enumeration.
    pub enum_limited_max_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            aut_search_max_order: 8,
            closure_cap: 4096,
            holomorph_budget: 512,
            enum_full_max_order: 6,
            enum_limited_max_order: 8,
        }
    }
}
