//! Nuclei, centrum, and center of a loop, by definitional scan.
//!
//! These scans are the independent reference that the regular-bijection
//! parameterizations in [`crate::autotopy`] are cross-checked against.

use crate::exec;
use crate::table::{ElementSet, LoopTable};
use crate::Elem;

fn scan(t: &LoopTable, keep: impl Fn(Elem) -> bool + Sync) -> ElementSet {
    let hits = exec::map_range(t.n(), |a| keep(a));
    ElementSet::new(
        t.n(),
        (0..t.n()).filter(|&a| hits[a]).collect(),
    )
}

/// Elements a with a * (y * z) = (a * y) * z for all y, z.
pub fn left_nucleus(t: &LoopTable) -> ElementSet {
    let s = scan(t, |a| {
        (0..t.n()).all(|y| (0..t.n()).all(|z| t.mul(a, t.mul(y, z)) == t.mul(t.mul(a, y), z)))
    });
    assert_closed(t, &s, "left nucleus");
    s
}

/// Elements a with (z * y) * a = z * (y * a) for all y, z.
pub fn right_nucleus(t: &LoopTable) -> ElementSet {
    let s = scan(t, |a| {
        (0..t.n()).all(|y| (0..t.n()).all(|z| t.mul(t.mul(z, y), a) == t.mul(z, t.mul(y, a))))
    });
    assert_closed(t, &s, "right nucleus");
    s
}

/// Elements a with (z * a) * y = z * (a * y) for all y, z.
pub fn middle_nucleus(t: &LoopTable) -> ElementSet {
    let s = scan(t, |a| {
        (0..t.n()).all(|y| (0..t.n()).all(|z| t.mul(t.mul(z, a), y) == t.mul(z, t.mul(a, y))))
    });
    assert_closed(t, &s, "middle nucleus");
    s
}

/// Elements commuting with everything.
pub fn centrum(t: &LoopTable) -> ElementSet {
    scan(t, |a| (0..t.n()).all(|x| t.mul(a, x) == t.mul(x, a)))
}

/// Every nucleus of a loop is closed under multiplication; a violation here
/// means the table was corrupted after validation.
fn assert_closed(t: &LoopTable, s: &ElementSet, what: &str) {
    assert!(s.contains(t.identity()), "{what} lost the identity");
    assert!(s.is_closed_under_mul(t), "{what} is not closed under multiplication");
}

/// The six standard subsets of a loop in one bundle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NucleiReport {
    pub n_lambda: ElementSet,
    pub n_rho: ElementSet,
    pub n_mu: ElementSet,
    pub nucleus: ElementSet,
    pub centrum: ElementSet,
    pub center: ElementSet,
}

pub fn nuclei_report(t: &LoopTable) -> NucleiReport {
    let n_lambda = left_nucleus(t);
    let n_rho = right_nucleus(t);
    let n_mu = middle_nucleus(t);
    let nucleus = n_lambda.intersect(&n_rho).intersect(&n_mu);
    let centrum_set = centrum(t);
    let center = nucleus.intersect(&centrum_set);
    NucleiReport {
        n_lambda,
        n_rho,
        n_mu,
        nucleus,
        centrum: centrum_set,
        center,
    }
}

/// Center: nucleus elements that also commute with everything.
pub fn center(t: &LoopTable) -> ElementSet {
    nuclei_report(t).center
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::enumerate::reduced_loops;

    #[test]
    fn groups_have_full_nuclei() {
        for (name, t) in catalog::sanity_suite() {
            let r = nuclei_report(&t);
            for (set, which) in [
                (&r.n_lambda, "n_lambda"),
                (&r.n_rho, "n_rho"),
                (&r.n_mu, "n_mu"),
                (&r.nucleus, "nucleus"),
            ] {
                assert!(set.is_full(), "{name}: {which} not full");
            }
        }
    }

    #[test]
    fn abelian_centrum_is_everything() {
        let r = nuclei_report(&catalog::cyclic(6));
        assert!(r.centrum.is_full());
        assert!(r.center.is_full());
    }

    #[test]
    fn s3_is_centerless() {
        let r = nuclei_report(&catalog::symmetric_3());
        let e = catalog::symmetric_3().identity();
        assert_eq!(r.center.members(), &[e]);
        assert_eq!(r.centrum.members(), &[e]);
    }

    #[test]
    fn order_one_loop() {
        let t = LoopTable::validate(&[vec![0]]).unwrap();
        let r = nuclei_report(&t);
        assert_eq!(r.center.members(), &[0]);
        assert!(r.nucleus.is_full());
    }

    #[test]
    fn nucleus_full_iff_associative() {
        for t in reduced_loops(5) {
            let r = nuclei_report(&t);
            assert_eq!(r.nucleus.is_full(), t.is_associative());
            assert!(r.nucleus.contains(t.identity()));
        }
    }

    #[test]
    fn first_nonassociative_order5_has_proper_nucleus() {
        let t = reduced_loops(5)
            .into_iter()
            .find(|t| !t.is_associative())
            .unwrap();
        let r = nuclei_report(&t);
        assert!(!r.nucleus.is_full());
        assert!(r.nucleus.contains(0));
    }

    #[test]
    fn right_nucleus_definition_restated() {
        // For a in N_rho: (z*y)*a = z*(y*a) verified verbatim.
        for t in reduced_loops(5).iter().take(8) {
            let nr = right_nucleus(t);
            for &a in nr.members() {
                for y in 0..t.n() {
                    for z in 0..t.n() {
                        assert_eq!(t.mul(t.mul(z, y), a), t.mul(z, t.mul(y, a)));
                    }
                }
            }
        }
    }
}
