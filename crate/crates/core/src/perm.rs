//! Bijections on `0..n` in one-line (image) form.

use std::fmt;

use crate::Elem;

/// A permutation of the points `0..n`; point `i` maps to `image[i]`.
///
/// Ordering is lexicographic on the image sequence, which is the canonical
/// order used everywhere a set of permutations is sorted for output.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    image: Vec<Elem>,
}

impl Perm {
    /// Builds a permutation from its image sequence, checking bijectivity.
    pub fn from_image(image: Vec<Elem>) -> Option<Perm> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        Some(Perm { image })
    }

    pub fn identity(n: usize) -> Perm {
        Perm {
            image: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    #[inline]
    pub fn apply(&self, point: Elem) -> Elem {
        self.image[point]
    }

    pub fn image(&self) -> &[Elem] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Postfix composition: apply `self` first, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.n(), other.n());
        Perm {
            image: self.image.iter().map(|&v| other.image[v]).collect(),
        }
    }

    pub fn invert(&self) -> Perm {
        let mut image = vec![0; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v] = i;
        }
        Perm { image }
    }

    /// One-line cycle notation with fixed points omitted, 1-based points.
    /// The identity renders as `()`.
    pub fn cycle_notation(&self) -> String {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.image[start] == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    out.push(' ');
                }
                out.push_str(&(p + 1).to_string());
                first = false;
                p = self.image[p];
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.image)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_notation())
    }
}

/// Advances `slice` to its lexicographic successor; false once exhausted.
fn next_arrangement(slice: &mut [Elem]) -> bool {
    let n = slice.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && slice[i - 1] >= slice[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while slice[j] <= slice[i - 1] {
        j -= 1;
    }
    slice.swap(i - 1, j);
    slice[i..].reverse();
    true
}

/// All of Sym(n) in lexicographic order of image sequences.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut image: Vec<Elem> = (0..n).collect();
    loop {
        out.push(Perm {
            image: image.clone(),
        });
        if !next_arrangement(&mut image) {
            break;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn identity_fixes_everything() {
        let id = Perm::identity(5);
        assert!(id.is_identity());
        for i in 0..5 {
            assert_eq!(id.apply(i), i);
        }
    }

    #[test]
    fn from_image_rejects_duplicates_and_range() {
        assert!(Perm::from_image(vec![0, 0, 1]).is_none());
        assert!(Perm::from_image(vec![0, 3]).is_none());
        assert!(Perm::from_image(vec![2, 0, 1]).is_some());
    }

    #[test]
    fn then_is_postfix() {
        // p: 0->1->2->0, q swaps 0 and 1; p then q sends 0 -> 1 -> 0.
        let p = Perm::from_image(vec![1, 2, 0]).unwrap();
        let q = Perm::from_image(vec![1, 0, 2]).unwrap();
        assert_eq!(p.then(&q).apply(0), 0);
        assert_eq!(q.then(&p).apply(0), 2);
    }

    #[test]
    fn all_perms_counts_and_order() {
        assert_eq!(all_perms(0).len(), 1);
        assert_eq!(all_perms(1).len(), 1);
        assert_eq!(all_perms(4).len(), 24);
        let perms = all_perms(3);
        let mut sorted = perms.clone();
        sorted.sort();
        assert_eq!(perms, sorted);
        assert!(perms[0].is_identity());
    }

    #[test]
    fn cycle_notation_examples() {
        assert_eq!(Perm::identity(3).cycle_notation(), "()");
        assert_eq!(
            Perm::from_image(vec![1, 0, 2]).unwrap().cycle_notation(),
            "(1 2)"
        );
        assert_eq!(
            Perm::from_image(vec![1, 2, 0, 4, 3]).unwrap().cycle_notation(),
            "(1 2 3)(4 5)"
        );
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Perm> {
        Just((0..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Perm::from_image(v).unwrap())
    }

    proptest! {
        #[test]
        fn compose_with_inverse_is_identity(p in arb_perm(7)) {
            prop_assert!(p.then(&p.invert()).is_identity());
            prop_assert!(p.invert().then(&p).is_identity());
        }

        #[test]
        fn composition_associates(p in arb_perm(6), q in arb_perm(6), r in arb_perm(6)) {
            prop_assert_eq!(p.then(&q).then(&r), p.then(&q.then(&r)));
        }
    }
}
