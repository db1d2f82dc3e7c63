//! Cayley-table loops: validation, translations, divisions, one-sided inverses.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::exec;
use crate::perm::Perm;
use crate::Elem;

/// Why a raw grid was rejected as a loop table.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ValidateError {
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedInput {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("entry at row {row}, column {col} is {value}, out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("not a Latin square: value {value} repeats in {axis} {index}")]
    NotLatinSquare {
        axis: Axis,
        index: usize,
        value: Elem,
    },
    #[error("table has no two-sided identity element")]
    NoIdentity,
    #[error("empty table")]
    Empty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    Row,
    Column,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Row => f.write_str("row"),
            Axis::Column => f.write_str("column"),
        }
    }
}

/// A finite loop as an immutable n x n Cayley table over `0..n`.
///
/// Division and inverse tables are computed once at validation time; after
/// that every operation is a plain lookup, and the structure can be shared
/// freely across worker threads.
#[derive(Clone)]
pub struct LoopTable {
    n: usize,
    /// Row-major products: `table[x * n + y] = x * y`.
    table: Vec<Elem>,
    e: Elem,
    /// `ldiv[x * n + y] = x \ y`, the unique z with x * z = y.
    ldiv: Vec<Elem>,
    /// `rdiv[x * n + y] = x / y`, the unique z with z * y = x.
    rdiv: Vec<Elem>,
    linv: Vec<Elem>,
    rinv: Vec<Elem>,
}

impl PartialEq for LoopTable {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.table == other.table
    }
}

impl Eq for LoopTable {}

impl PartialOrd for LoopTable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LoopTable {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, &self.table).cmp(&(other.n, &other.table))
    }
}

impl Hash for LoopTable {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.table.hash(state);
    }
}

impl fmt::Debug for LoopTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LoopTable(n={}, e={})", self.n, self.e)?;
        for x in 0..self.n {
            writeln!(f, "  {:?}", &self.table[x * self.n..(x + 1) * self.n])?;
        }
        Ok(())
    }
}

impl LoopTable {
    /// Validates a raw grid as a loop table: square, in-range, Latin, with a
    /// two-sided identity (detected, not assumed to be index 0).
    pub fn validate(raw: &[Vec<usize>]) -> Result<LoopTable, ValidateError> {
        let n = raw.len();
        if n == 0 {
            return Err(ValidateError::Empty);
        }
        for (row, r) in raw.iter().enumerate() {
            if r.len() != n {
                return Err(ValidateError::RaggedInput {
                    row,
                    expected: n,
                    found: r.len(),
                });
            }
            for (col, &v) in r.iter().enumerate() {
                if v >= n {
                    return Err(ValidateError::EntryOutOfRange {
                        row,
                        col,
                        value: v,
                        order: n,
                    });
                }
            }
        }
        for (i, r) in raw.iter().enumerate() {
            let mut seen = vec![false; n];
            for &v in r {
                if seen[v] {
                    return Err(ValidateError::NotLatinSquare {
                        axis: Axis::Row,
                        index: i,
                        value: v,
                    });
                }
                seen[v] = true;
            }
        }
        for col in 0..n {
            let mut seen = vec![false; n];
            for row in raw {
                let v = row[col];
                if seen[v] {
                    return Err(ValidateError::NotLatinSquare {
                        axis: Axis::Column,
                        index: col,
                        value: v,
                    });
                }
                seen[v] = true;
            }
        }
        let e = (0..n)
            .find(|&c| {
                (0..n).all(|x| raw[c][x] == x) && (0..n).all(|x| raw[x][c] == x)
            })
            .ok_or(ValidateError::NoIdentity)?;

        let mut table = Vec::with_capacity(n * n);
        for r in raw {
            table.extend_from_slice(r);
        }
        let mut ldiv = vec![0; n * n];
        let mut rdiv = vec![0; n * n];
        for x in 0..n {
            for z in 0..n {
                let y = table[x * n + z];
                ldiv[x * n + y] = z; // x * z = y  =>  x \ y = z
                let w = table[z * n + x];
                rdiv[w * n + x] = z; // z * x = w  =>  w / x = z
            }
        }
        let linv = (0..n).map(|x| rdiv[e * n + x]).collect(); // z * x = e
        let rinv = (0..n).map(|x| ldiv[x * n + e]).collect(); // x * z = e
        Ok(LoopTable {
            n,
            table,
            e,
            ldiv,
            rdiv,
            linv,
            rinv,
        })
    }

    /// Builds the table of a known-good multiplication rule.
    ///
    /// Panics if the rule does not define a loop; callers use it for
    /// programmatic constructions that are loops by design.
    pub fn from_fn(n: usize, mul: impl Fn(Elem, Elem) -> Elem) -> LoopTable {
        let raw: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| mul(x, y)).collect()).collect();
        LoopTable::validate(&raw).expect("multiplication rule does not define a loop")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> Elem {
        self.e
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.table[x * self.n + y]
    }

    /// Left division `x \ y`: the unique z with x * z = y.
    #[inline]
    pub fn ldiv(&self, x: Elem, y: Elem) -> Elem {
        self.ldiv[x * self.n + y]
    }

    /// Right division `x / y`: the unique z with z * y = x.
    #[inline]
    pub fn rdiv(&self, x: Elem, y: Elem) -> Elem {
        self.rdiv[x * self.n + y]
    }

    /// Left inverse `x^λ`, with `x^λ * x = e`.
    #[inline]
    pub fn linv(&self, x: Elem) -> Elem {
        self.linv[x]
    }

    /// Right inverse `x^ρ`, with `x * x^ρ = e`.
    #[inline]
    pub fn rinv(&self, x: Elem) -> Elem {
        self.rinv[x]
    }

    /// Left translation `L_x`: y -> x * y.
    pub fn left_translation(&self, x: Elem) -> Perm {
        Perm::from_image(self.table[x * self.n..(x + 1) * self.n].to_vec())
            .expect("rows of a validated table are permutations")
    }

    /// Right translation `R_x`: y -> y * x.
    pub fn right_translation(&self, x: Elem) -> Perm {
        Perm::from_image((0..self.n).map(|y| self.mul(y, x)).collect())
            .expect("columns of a validated table are permutations")
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        (0..self.n)
            .map(|x| self.table[x * self.n..(x + 1) * self.n].to_vec())
            .collect()
    }

    /// True iff (x*y)*z = x*(y*z) for all triples; otherwise the first
    /// violating triple in lexicographic (x, y, z) order.
    pub fn associativity_violation(&self) -> Option<(Elem, Elem, Elem)> {
        exec::first_hit(self.n, |x| {
            for y in 0..self.n {
                for z in 0..self.n {
                    if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
            None
        })
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_violation().is_none()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|x| (x..self.n).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// True iff `p` fixes the identity and preserves products.
    pub fn is_automorphism(&self, p: &Perm) -> bool {
        if p.n() != self.n || p.apply(self.e) != self.e {
            return false;
        }
        (0..self.n).all(|x| {
            (0..self.n).all(|y| p.apply(self.mul(x, y)) == self.mul(p.apply(x), p.apply(y)))
        })
    }
}

/// A sorted, duplicate-free set of elements of a loop of order `n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet {
    n: usize,
    members: Vec<Elem>,
}

impl ElementSet {
    pub fn new(n: usize, mut members: Vec<Elem>) -> ElementSet {
        members.sort_unstable();
        members.dedup();
        debug_assert!(members.iter().all(|&m| m < n));
        ElementSet { n, members }
    }

    pub fn full(n: usize) -> ElementSet {
        ElementSet {
            n,
            members: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == self.n
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn intersect(&self, other: &ElementSet) -> ElementSet {
        debug_assert_eq!(self.n, other.n);
        ElementSet {
            n: self.n,
            members: self
                .members
                .iter()
                .copied()
                .filter(|&m| other.contains(m))
                .collect(),
        }
    }

    /// True iff the set is closed under the loop's multiplication.
    pub fn is_closed_under_mul(&self, loop_table: &LoopTable) -> bool {
        self.members
            .iter()
            .all(|&a| self.members.iter().all(|&b| self.contains(loop_table.mul(a, b))))
    }
}

/// Searches for a loop isomorphism `f` with f(x*y) = f(x)*f(y).
///
/// The identity must map to the identity; images of the remaining points are
/// assigned in index order, propagating every product whose operands are
/// already placed and backtracking on conflict.
pub fn loops_isomorphic(a: &LoopTable, b: &LoopTable) -> Option<Perm> {
    if a.n() != b.n() {
        return None;
    }
    let n = a.n();
    let mut f: Vec<Option<Elem>> = vec![None; n];
    let mut used = vec![false; n];
    f[a.identity()] = Some(b.identity());
    used[b.identity()] = true;
    if extend_isomorphism(a, b, &mut f, &mut used) {
        Perm::from_image(f.into_iter().map(|v| v.unwrap()).collect())
    } else {
        None
    }
}

fn extend_isomorphism(
    a: &LoopTable,
    b: &LoopTable,
    f: &mut Vec<Option<Elem>>,
    used: &mut Vec<bool>,
) -> bool {
    let n = a.n();
    let next = match (0..n).find(|&x| f[x].is_none()) {
        Some(x) => x,
        None => return true,
    };
    for cand in 0..n {
        if used[cand] {
            continue;
        }
        let mut trail = Vec::new();
        if assign_and_propagate(a, b, f, used, &mut trail, next, cand)
            && extend_isomorphism(a, b, f, used)
        {
            return true;
        }
        for x in trail {
            let v = f[x].take().unwrap();
            used[v] = false;
        }
    }
    false
}

/// Records `f[x] = v` plus every forced consequence; false on contradiction.
fn assign_and_propagate(
    a: &LoopTable,
    b: &LoopTable,
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
    let n = a.n();
    for y in 0..n {
        if let Some(fy) = f[y] {
            let fv = f[x].unwrap();
            // x*y and y*x must map to the corresponding products in b.
            let px = a.mul(x, y);
            let qx = b.mul(fv, fy);
            if !assign_and_propagate(a, b, f, used, trail, px, qx) {
                return false;
            }
            let py = a.mul(y, x);
            let qy = b.mul(fy, fv);
            if !assign_and_propagate(a, b, f, used, trail, py, qy) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use proptest::prelude::*;

    fn z4_raw() -> Vec<Vec<usize>> {
        (0..4).map(|x| (0..4).map(|y| (x + y) % 4).collect()).collect()
    }

    #[test]
    fn validates_cyclic_group() {
        let t = LoopTable::validate(&z4_raw()).unwrap();
        assert_eq!(t.n(), 4);
        assert_eq!(t.identity(), 0);
        assert_eq!(t.mul(2, 3), 1);
    }

    #[test]
    fn rejects_swapped_entries() {
        // Swapping the first two entries of row 2 duplicates 3 in column 0.
        let mut raw = z4_raw();
        raw[2].swap(0, 1);
        let err = LoopTable::validate(&raw).unwrap_err();
        assert_eq!(
            err,
            ValidateError::NotLatinSquare {
                axis: Axis::Column,
                index: 0,
                value: 3
            }
        );
    }

    #[test]
    fn rejects_ragged_and_out_of_range() {
        let raw = vec![vec![0, 1], vec![1]];
        assert!(matches!(
            LoopTable::validate(&raw),
            Err(ValidateError::RaggedInput { row: 1, .. })
        ));
        let raw = vec![vec![0, 2], vec![1, 0]];
        assert!(matches!(
            LoopTable::validate(&raw),
            Err(ValidateError::EntryOutOfRange { .. })
        ));
    }

    #[test]
    fn rejects_latin_square_without_identity() {
        let raw = vec![vec![1, 0, 2], vec![0, 2, 1], vec![2, 1, 0]];
        assert_eq!(LoopTable::validate(&raw), Err(ValidateError::NoIdentity));
    }

    #[test]
    fn detects_identity_not_at_zero() {
        // Z_3 with symbols relabeled by the cycle (0 1 2): identity becomes 1.
        let relabel = [1, 2, 0];
        let mut raw = vec![vec![0; 3]; 3];
        for x in 0..3 {
            for y in 0..3 {
                raw[relabel[x]][relabel[y]] = relabel[(x + y) % 3];
            }
        }
        let t = LoopTable::validate(&raw).unwrap();
        assert_eq!(t.identity(), 1);
    }

    #[test]
    fn order_one_loop_is_accepted() {
        let t = LoopTable::validate(&[vec![0]]).unwrap();
        assert_eq!(t.identity(), 0);
        assert!(t.is_associative());
        assert_eq!(t.linv(0), 0);
    }

    #[test]
    fn division_examples() {
        let t = LoopTable::validate(&z4_raw()).unwrap();
        assert_eq!(t.ldiv(2, 1), 3);
        assert_eq!(t.linv(3), 1);
        assert_eq!(t.linv(0), 0);
        assert_eq!(t.rinv(0), 0);
        for x in 0..4 {
            assert_eq!(t.rdiv(x, x), 0);
            assert_eq!(t.linv(x), t.rinv(x));
        }
    }

    #[test]
    fn translation_examples() {
        let t = LoopTable::validate(&z4_raw()).unwrap();
        assert!(t.left_translation(0).is_identity());
        assert_eq!(t.right_translation(1).image(), &[1, 2, 3, 0]);
    }

    #[test]
    fn associativity_scan() {
        assert!(catalog::symmetric_3().is_associative());
        assert!(catalog::cyclic(5).is_associative());
    }

    #[test]
    fn isomorphism_examples() {
        let z4 = catalog::cyclic(4);
        let f = loops_isomorphic(&z4, &z4).unwrap();
        assert!(z4.is_automorphism(&f));
        assert!(loops_isomorphic(&z4, &catalog::klein()).is_none());
    }

    #[test]
    fn element_set_basics() {
        let s = ElementSet::new(5, vec![3, 1, 3, 0]);
        assert_eq!(s.members(), &[0, 1, 3]);
        assert!(s.contains(3));
        assert!(!s.contains(2));
        assert!(ElementSet::full(4).is_full());
    }

    fn arb_small_loop() -> impl Strategy<Value = LoopTable> {
        let pool: Vec<LoopTable> = (1..=5)
            .flat_map(|n| crate::enumerate::reduced_loops(n))
            .collect();
        proptest::sample::select(pool)
    }

    proptest! {
        #[test]
        fn division_coherence(t in arb_small_loop(), x in 0usize..5, y in 0usize..5) {
            let n = t.n();
            let (x, y) = (x % n, y % n);
            prop_assert_eq!(t.mul(x, t.ldiv(x, y)), y);
            prop_assert_eq!(t.ldiv(x, t.mul(x, y)), y);
            prop_assert_eq!(t.rdiv(t.mul(y, x), x), y);
            prop_assert_eq!(t.mul(t.rdiv(y, x), x), y);
        }

        #[test]
        fn inverse_coherence(t in arb_small_loop(), x in 0usize..5) {
            let x = x % t.n();
            let e = t.identity();
            prop_assert_eq!(t.mul(t.linv(x), x), e);
            prop_assert_eq!(t.mul(x, t.rinv(x)), e);
        }

        #[test]
        fn translation_division_duality(t in arb_small_loop(), x in 0usize..5, y in 0usize..5) {
            let (x, y) = (x % t.n(), y % t.n());
            // x \ y is y under the inverse of L_x.
            prop_assert_eq!(t.ldiv(x, y), t.left_translation(x).invert().apply(y));
            prop_assert_eq!(t.left_translation(x).apply(t.ldiv(x, y)), y);
        }

        #[test]
        fn translations_are_permutations(t in arb_small_loop(), x in 0usize..5) {
            let x = x % t.n();
            prop_assert!(t.left_translation(x).then(&t.left_translation(x).invert()).is_identity());
            prop_assert!(t.right_translation(x).then(&t.right_translation(x).invert()).is_identity());
        }
    }
}
