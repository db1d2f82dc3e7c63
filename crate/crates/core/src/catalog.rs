//! Built-in group tables used by tests, benchmarks, and the docs.

use crate::perm::{all_perms, Perm};
use crate::table::LoopTable;

/// Cyclic group Z_n under addition.
pub fn cyclic(n: usize) -> LoopTable {
    LoopTable::from_fn(n, |x, y| (x + y) % n)
}

/// Klein four-group: every non-identity element has order 2.
pub fn klein() -> LoopTable {
    LoopTable::from_fn(4, |x, y| x ^ y)
}

/// Cayley table of a set of permutations closed under postfix composition.
///
/// Elements are sorted canonically (identity first), and the product of
/// indices i, j is the index of `perms[i].then(perms[j])`.
pub fn group_from_perms(mut perms: Vec<Perm>) -> LoopTable {
    perms.sort();
    perms.dedup();
    let index_of = |p: &Perm| {
        perms
            .binary_search(p)
            .expect("permutation set is not closed under composition")
    };
    LoopTable::from_fn(perms.len(), |i, j| index_of(&perms[i].then(&perms[j])))
}

/// Symmetric group S_3 as the composition table of Sym(3).
pub fn symmetric_3() -> LoopTable {
    group_from_perms(all_perms(3))
}

/// Dihedral group of the square, order 8; element i + 4j is r^i s^j.
pub fn dihedral_4() -> LoopTable {
    LoopTable::from_fn(8, |a, b| {
        let (i, s) = (a % 4, a / 4);
        let (k, t) = (b % 4, b / 4);
        // s r^k = r^{-k} s
        let rot = if s == 0 { (i + k) % 4 } else { (i + 4 - k % 4) % 4 };
        rot + 4 * ((s + t) % 2)
    })
}

/// Quaternion group Q_8 on {1, -1, i, -i, j, -j, k, -k}; index 2u + sign.
pub fn quaternion_8() -> LoopTable {
    // basis products among 1, i, j, k with result sign
    const MUL: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    LoopTable::from_fn(8, |a, b| {
        let (u, s) = (a / 2, a % 2 == 1);
        let (v, t) = (b / 2, b % 2 == 1);
        let (w, neg) = MUL[u][v];
        2 * w + ((s ^ t ^ neg) as usize)
    })
}

/// The tables exercised by the group sanity suite, with display names.
pub fn sanity_suite() -> Vec<(&'static str, LoopTable)> {
    let mut out: Vec<(&'static str, LoopTable)> = Vec::new();
    let names = ["Z_2", "Z_3", "Z_4", "Z_5", "Z_6", "Z_7", "Z_8"];
    for (i, name) in names.iter().enumerate() {
        out.push((name, cyclic(i + 2)));
    }
    out.push(("V_4", klein()));
    out.push(("S_3", symmetric_3()));
    out.push(("D_4", dihedral_4()));
    out.push(("Q_8", quaternion_8()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_catalog_tables_are_groups() {
        for (name, t) in sanity_suite() {
            assert!(t.is_associative(), "{name} is not associative");
            assert_eq!(t.identity(), 0, "{name} identity is not index 0");
        }
    }

    #[test]
    fn commutativity_matches_structure() {
        assert!(cyclic(6).is_commutative());
        assert!(klein().is_commutative());
        assert!(!symmetric_3().is_commutative());
        assert!(!dihedral_4().is_commutative());
        assert!(!quaternion_8().is_commutative());
    }

    #[test]
    fn quaternion_has_unique_involution() {
        let q = quaternion_8();
        let involutions = (1..8).filter(|&x| q.mul(x, x) == 0).count();
        assert_eq!(involutions, 1); // only -1
    }

    #[test]
    fn dihedral_relation_holds() {
        let d = dihedral_4();
        // s r s^-1 = r^-1 with r = 1, s = 4
        let s_inv = d.ldiv(4, 0);
        assert_eq!(d.mul(d.mul(4, 1), s_inv), 3);
    }
}
