//! The A-holomorph of a loop: the loop on A x L with
//! (α, x) ∘ (β, y) = (αβ, xβ * y), materialized as an ordinary table.

use std::collections::HashMap;

use thiserror::Error;

use crate::autotopy::{GroupError, PermGroup};
use crate::perm::Perm;
use crate::table::{LoopTable, ValidateError};
use crate::{Elem, Limits};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum HolomorphError {
    #[error("generator {index} is not an automorphism of the loop")]
    NotAnAutomorphism { index: usize },
    #[error("group element {index} is not an automorphism of the loop")]
    GroupElementNotAutomorphism { index: usize },
    #[error(transparent)]
    Closure(#[from] GroupError),
    #[error("holomorph table failed validation: {0}")]
    Validate(#[from] ValidateError),
}

/// Closure of checked automorphism generators.
pub fn subgroup_closure(
    t: &LoopTable,
    generators: &[Perm],
    limits: &Limits,
) -> Result<PermGroup, HolomorphError> {
    for (index, g) in generators.iter().enumerate() {
        if !t.is_automorphism(g) {
            return Err(HolomorphError::NotAnAutomorphism { index });
        }
    }
    Ok(PermGroup::closure(t.n(), generators, limits.closure_cap)?)
}

/// A materialized holomorph with its flat-index bookkeeping.
///
/// Group elements are taken in canonical sorted order (the identity sorts
/// first), and the pair (g-th group element, x) lives at flat index g*n + x.
#[derive(Clone, Debug)]
pub struct HolomorphLoop {
    base: LoopTable,
    group: PermGroup,
    h_table: LoopTable,
}

impl HolomorphLoop {
    pub fn base(&self) -> &LoopTable {
        &self.base
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn table(&self) -> &LoopTable {
        &self.h_table
    }

    pub fn order(&self) -> usize {
        self.h_table.n()
    }

    pub fn index_of(&self, group_index: usize, x: Elem) -> Elem {
        debug_assert!(group_index < self.group.len() && x < self.base.n());
        group_index * self.base.n() + x
    }

    pub fn pair_of(&self, flat: Elem) -> (usize, Elem) {
        (flat / self.base.n(), flat % self.base.n())
    }
}

/// Builds the A-holomorph of `t`. Every element of `group` must be an
/// automorphism of `t`; the assembled table is re-validated before use.
pub fn build_holomorph(t: &LoopTable, group: &PermGroup) -> Result<HolomorphLoop, HolomorphError> {
    for (index, g) in group.elements().iter().enumerate() {
        if !t.is_automorphism(g) {
            return Err(HolomorphError::GroupElementNotAutomorphism { index });
        }
    }
    let n = t.n();
    let k = group.len();
    let index_of_perm: HashMap<&Perm, usize> = group
        .elements()
        .iter()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let mut raw = vec![vec![0usize; k * n]; k * n];
    for (g, alpha) in group.elements().iter().enumerate() {
        for x in 0..n {
            let row = g * n + x;
            for (h, beta) in group.elements().iter().enumerate() {
                let gh = index_of_perm[&alpha.then(beta)];
                let x_beta = beta.apply(x);
                for y in 0..n {
                    raw[row][h * n + y] = gh * n + t.mul(x_beta, y);
                }
            }
        }
    }
    let h_table = LoopTable::validate(&raw)?;
    Ok(HolomorphLoop {
        base: t.clone(),
        group: group.clone(),
        h_table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autotopy::automorphism_group;
    use crate::catalog;
    use crate::table::loops_isomorphic;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn closure_of_inversion_on_z3() {
        let z3 = catalog::cyclic(3);
        let inv = Perm::from_image(vec![0, 2, 1]).unwrap();
        let g = subgroup_closure(&z3, &[inv], &limits()).unwrap();
        assert_eq!(g.len(), 2);
    }

    #[test]
    fn closure_of_nothing_is_trivial() {
        let z4 = catalog::cyclic(4);
        let g = subgroup_closure(&z4, &[], &limits()).unwrap();
        assert!(g.is_trivial());
    }

    #[test]
    fn closure_of_doubling_on_z5() {
        let z5 = catalog::cyclic(5);
        let doubling = Perm::from_image(vec![0, 2, 4, 1, 3]).unwrap();
        let g = subgroup_closure(&z5, &[doubling], &limits()).unwrap();
        assert_eq!(g.len(), 4);
    }

    #[test]
    fn rejects_non_automorphism_generator() {
        let z4 = catalog::cyclic(4);
        let not_auto = Perm::from_image(vec![1, 0, 2, 3]).unwrap();
        assert_eq!(
            subgroup_closure(&z4, &[not_auto], &limits()).unwrap_err(),
            HolomorphError::NotAnAutomorphism { index: 0 }
        );
    }

    #[test]
    fn trivial_holomorph_is_the_base_loop() {
        let z3 = catalog::cyclic(3);
        let h = build_holomorph(&z3, &PermGroup::trivial(3)).unwrap();
        assert_eq!(h.order(), 3);
        assert!(loops_isomorphic(h.table(), &z3).is_some());
    }

    #[test]
    fn holomorph_of_z3_by_full_aum() {
        let z3 = catalog::cyclic(3);
        let aum = automorphism_group(&z3, &limits()).unwrap();
        let h = build_holomorph(&z3, &aum).unwrap();
        assert_eq!(h.order(), 6);
        assert!(h.table().is_associative());
        assert!(!h.table().is_commutative());
        // Classical fact: this is the smallest nonabelian group.
        assert!(loops_isomorphic(h.table(), &catalog::symmetric_3()).is_some());
    }

    #[test]
    fn identity_sits_at_flat_index_of_pair_i_e() {
        let z4 = catalog::cyclic(4);
        let aum = automorphism_group(&z4, &limits()).unwrap();
        let h = build_holomorph(&z4, &aum).unwrap();
        assert_eq!(h.table().identity(), h.index_of(0, z4.identity()));
        assert_eq!(h.table().identity(), 0);
        assert!(h.group().elements()[0].is_identity());
    }

    #[test]
    fn base_slice_is_a_subloop() {
        let t = crate::enumerate::reduced_loops(5)
            .into_iter()
            .find(|t| !t.is_associative())
            .unwrap();
        let aum = automorphism_group(&t, &limits()).unwrap();
        let h = build_holomorph(&t, &aum).unwrap();
        assert_eq!(h.order(), aum.len() * t.n());
        for x in 0..t.n() {
            for y in 0..t.n() {
                assert_eq!(h.table().mul(x, y), t.mul(x, y));
            }
        }
    }

    #[test]
    fn product_rule_and_projection() {
        let z5 = catalog::cyclic(5);
        let aum = automorphism_group(&z5, &limits()).unwrap();
        let h = build_holomorph(&z5, &aum).unwrap();
        let elems = aum.elements();
        for g in 0..aum.len() {
            for x in 0..5 {
                for k in 0..aum.len() {
                    for y in 0..5 {
                        let flat = h.table().mul(h.index_of(g, x), h.index_of(k, y));
                        let (gh, z) = h.pair_of(flat);
                        assert_eq!(elems[gh], elems[g].then(&elems[k]));
                        assert_eq!(z, z5.mul(elems[k].apply(x), y));
                    }
                }
            }
        }
    }

    #[test]
    fn holomorph_inverses_solve_the_product_equation() {
        let z4 = catalog::cyclic(4);
        let aum = automorphism_group(&z4, &limits()).unwrap();
        let h = build_holomorph(&z4, &aum).unwrap();
        let elems = aum.elements();
        for g in 0..aum.len() {
            let beta_index = elems
                .binary_search(&elems[g].invert())
                .expect("group is closed under inversion");
            for x in 0..4 {
                // (α, x) ∘ (β, y) = (I, e) forces β = α^-1 and y = xβ \ e.
                let x_beta = elems[beta_index].apply(x);
                let y = z4.ldiv(x_beta, z4.identity());
                let flat = h.index_of(g, x);
                assert_eq!(h.table().rinv(flat), h.index_of(beta_index, y));
            }
        }
    }

    #[test]
    fn holomorph_of_groups_is_associative() {
        for t in [catalog::cyclic(4), catalog::klein(), catalog::symmetric_3()] {
            let aum = automorphism_group(&t, &limits()).unwrap();
            let h = build_holomorph(&t, &aum).unwrap();
            assert!(h.table().is_associative());
        }
    }

    #[test]
    fn rejects_group_with_non_automorphism() {
        let z4 = catalog::cyclic(4);
        let bad = PermGroup::from_elements(vec![
            Perm::identity(4),
            Perm::from_image(vec![1, 0, 3, 2]).unwrap(),
        ])
        .unwrap();
        assert!(matches!(
            build_holomorph(&z4, &bad),
            Err(HolomorphError::GroupElementNotAutomorphism { .. })
        ));
    }
}
