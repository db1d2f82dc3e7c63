//! Exhaustive enumeration of loops of small order, plus predicate filtering.
//!
//! A normalized loop has its identity at index 0, which forces the first row
//! and column into natural order; these are exactly the reduced Latin squares.
//! Enumeration is row-major backtracking and emits tables in lexicographic
//! order of the row-major flattening. The parallel path splits the search on
//! the completed second row and concatenates per-prefix results in prefix
//! order, so output is identical to the sequential scan.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exec;
use crate::table::LoopTable;
use crate::{Elem, Limits};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("order {order} exceeds the enumeration bound {bound} ({context})")]
    BoundExceeded {
        order: usize,
        bound: usize,
        context: &'static str,
    },
}

/// Named loop predicates usable as enumeration filters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Filter {
    Osborn,
    Nonassociative,
    NontrivialAum,
    HolomorphOsbornAllSubgroups,
    HolomorphOsbornSomeSubgroup,
}

impl Filter {
    pub const ALL: [Filter; 5] = [
        Filter::Osborn,
        Filter::Nonassociative,
        Filter::NontrivialAum,
        Filter::HolomorphOsbornAllSubgroups,
        Filter::HolomorphOsbornSomeSubgroup,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Filter::Osborn => "osborn",
            Filter::Nonassociative => "nonassociative",
            Filter::NontrivialAum => "nontrivial-aum",
            Filter::HolomorphOsbornAllSubgroups => "holomorph-osborn-all-subgroups",
            Filter::HolomorphOsbornSomeSubgroup => "holomorph-osborn-some-subgroup",
        }
    }

    pub fn parse(s: &str) -> Option<Filter> {
        Filter::ALL.iter().copied().find(|f| f.name() == s)
    }

    /// Evaluates the predicate on a single loop.
    pub fn matches(self, t: &LoopTable, limits: &Limits) -> bool {
        match self {
            Filter::Osborn => crate::verify::osborn_check(t, crate::verify::OsbornVariant::Eq1)
                .status
                .holds(),
            Filter::Nonassociative => !t.is_associative(),
            Filter::NontrivialAum => {
                crate::autotopy::automorphism_group(t, limits)
                    .map(|g| g.len() > 1)
                    .unwrap_or(false)
            }
            Filter::HolomorphOsbornAllSubgroups => holomorph_osborn_subgroups(t, limits, true),
            Filter::HolomorphOsbornSomeSubgroup => holomorph_osborn_subgroups(t, limits, false),
        }
    }
}

fn holomorph_osborn_subgroups(t: &LoopTable, limits: &Limits, all: bool) -> bool {
    let aum = match crate::autotopy::automorphism_group(t, limits) {
        Ok(g) => g,
        Err(_) => return false,
    };
    let mut subgroups = aum.subgroups();
    subgroups.retain(|a| a.len() * t.n() <= limits.holomorph_budget);
    let holds = |a: &crate::autotopy::PermGroup| {
        crate::verify::holomorph_osborn_direct(t, a, limits)
            .map(|c| c.status.holds())
            .unwrap_or(false)
    };
    if all {
        subgroups.iter().all(holds)
    } else {
        subgroups.iter().any(holds)
    }
}

/// What to enumerate: order, normalization, conjunction of filters, result cap.
#[derive(Clone, Debug)]
pub struct EnumSpec {
    pub order: usize,
    /// Identity pinned to index 0 (first row and column in natural order).
    pub normalized: bool,
    pub filters: Vec<Filter>,
    pub limit: Option<usize>,
}

impl EnumSpec {
    pub fn normalized(order: usize) -> EnumSpec {
        EnumSpec {
            order,
            normalized: true,
            filters: Vec::new(),
            limit: None,
        }
    }
}

fn check_bounds(spec: &EnumSpec, limits: &Limits) -> Result<(), EnumError> {
    if spec.limit.is_none() && spec.order > limits.enum_full_max_order {
        return Err(EnumError::BoundExceeded {
            order: spec.order,
            bound: limits.enum_full_max_order,
            context: "full sweep; pass a limit for orders above this",
        });
    }
    if spec.order > limits.enum_limited_max_order {
        return Err(EnumError::BoundExceeded {
            order: spec.order,
            bound: limits.enum_limited_max_order,
            context: "limited enumeration",
        });
    }
    Ok(())
}

/// Backtracking state over the free cells of a partially fixed grid.
struct Search {
    n: usize,
    grid: Vec<Vec<Elem>>,
    row_used: Vec<u32>,
    col_used: Vec<u32>,
    cells: Vec<(usize, usize)>,
}

impl Search {
    fn new(n: usize, e: Elem) -> Search {
        let mut grid = vec![vec![usize::MAX; n]; n];
        let mut row_used = vec![0u32; n];
        let mut col_used = vec![0u32; n];
        for x in 0..n {
            grid[e][x] = x;
            grid[x][e] = x;
            row_used[e] |= 1 << x;
            col_used[e] |= 1 << x;
            row_used[x] |= 1 << x;
            col_used[x] |= 1 << x;
        }
        let cells = (0..n)
            .flat_map(|r| (0..n).map(move |c| (r, c)))
            .filter(|&(r, c)| r != e && c != e)
            .collect();
        Search {
            n,
            grid,
            row_used,
            col_used,
            cells,
        }
    }

    /// Fills cells from `idx` on; `emit` returns false to stop the search.
    fn run(&mut self, idx: usize, emit: &mut impl FnMut(&[Vec<Elem>]) -> bool) -> bool {
        if idx == self.cells.len() {
            return emit(&self.grid);
        }
        let (r, c) = self.cells[idx];
        let taken = self.row_used[r] | self.col_used[c];
        for v in 0..self.n {
            let bit = 1u32 << v;
            if taken & bit != 0 {
                continue;
            }
            self.grid[r][c] = v;
            self.row_used[r] |= bit;
            self.col_used[c] |= bit;
            let keep_going = self.run(idx + 1, emit);
            self.grid[r][c] = usize::MAX;
            self.row_used[r] &= !bit;
            self.col_used[c] &= !bit;
            if !keep_going {
                return false;
            }
        }
        true
    }

    /// Index of the first cell outside the first free row, for prefix splits.
    fn split_point(&self) -> usize {
        if self.cells.is_empty() {
            return 0;
        }
        let first_row = self.cells[0].0;
        self.cells.iter().take_while(|&&(r, _)| r == first_row).count()
    }
}

fn grid_to_table(grid: &[Vec<Elem>]) -> LoopTable {
    LoopTable::validate(grid).expect("backtracking emits valid loop tables")
}

/// All loops of order `n` with identity `e`, in lexicographic row-major order.
fn with_identity_seq(n: usize, e: Elem) -> Vec<LoopTable> {
    let mut out = Vec::new();
    let mut s = Search::new(n, e);
    s.run(0, &mut |grid| {
        out.push(grid_to_table(grid));
        true
    });
    out
}

/// Parallel variant: splits on the completed first free row.
fn with_identity_par(n: usize, e: Elem) -> Vec<LoopTable> {
    let mut s = Search::new(n, e);
    let split = s.split_point();
    if split == 0 {
        return with_identity_seq(n, e);
    }
    // Collect every completion of the first free row as a prefix.
    let mut prefixes: Vec<Vec<Elem>> = Vec::new();
    let first_row = s.cells[0].0;
    {
        let cells = s.cells.clone();
        s.cells.truncate(split);
        s.run(0, &mut |grid| {
            prefixes.push(grid[first_row].clone());
            true
        });
        s.cells = cells;
    }
    exec::flat_map_vec(prefixes, move |row| {
        let mut s = Search::new(n, e);
        for idx in 0..split {
            let (r, c) = s.cells[idx];
            let v = row[c];
            s.grid[r][c] = v;
            s.row_used[r] |= 1 << v;
            s.col_used[c] |= 1 << v;
        }
        let mut out = Vec::new();
        s.run(split, &mut |grid| {
            out.push(grid_to_table(grid));
            true
        });
        out
    })
}

/// All normalized loops of order `n` (identity 0), lexicographic.
pub fn reduced_loops(n: usize) -> Vec<LoopTable> {
    with_identity_par(n, 0)
}

/// Single-threaded variant of [`reduced_loops`]; the benchmark baseline.
pub fn reduced_loops_seq(n: usize) -> Vec<LoopTable> {
    with_identity_seq(n, 0)
}

/// Enumerates per `spec`, applying its filters as a conjunction.
pub fn enumerate_loops(spec: &EnumSpec, limits: &Limits) -> Result<Vec<LoopTable>, EnumError> {
    check_bounds(spec, limits)?;
    let identities: Vec<Elem> = if spec.normalized {
        vec![0]
    } else {
        (0..spec.order).collect()
    };
    let passes = |t: &LoopTable| spec.filters.iter().all(|f| f.matches(t, limits));
    if let Some(limit) = spec.limit {
        // Early-stopping sequential scan, so huge orders stay tractable.
        let mut out = Vec::new();
        for &e in &identities {
            if out.len() >= limit {
                break;
            }
            let mut s = Search::new(spec.order, e);
            s.run(0, &mut |grid| {
                let t = grid_to_table(grid);
                if passes(&t) {
                    out.push(t);
                }
                out.len() < limit
            });
        }
        Ok(out)
    } else {
        let all: Vec<LoopTable> = identities
            .iter()
            .flat_map(|&e| with_identity_par(spec.order, e))
            .collect();
        let keep = exec::map_range(all.len(), |i| passes(&all[i]));
        Ok(all
            .into_iter()
            .zip(keep)
            .filter_map(|(t, k)| k.then_some(t))
            .collect())
    }
}

/// Per-filter counts over a full sweep, plus the first witness of the
/// conjunction (re-verified before it is returned).
#[derive(Clone, Debug)]
pub struct FilterCounts {
    pub order: usize,
    pub total: usize,
    pub per_filter: Vec<(Filter, usize)>,
    pub matched: usize,
    pub first_witness: Option<LoopTable>,
}

pub fn filter_count(spec: &EnumSpec, limits: &Limits) -> Result<FilterCounts, EnumError> {
    let sweep = EnumSpec {
        filters: Vec::new(),
        limit: None,
        ..spec.clone()
    };
    check_bounds(&sweep, limits)?;
    let all = enumerate_loops(&sweep, limits)?;
    let verdicts: Vec<Vec<bool>> = exec::map_range(all.len(), |i| {
        spec.filters.iter().map(|f| f.matches(&all[i], limits)).collect()
    });
    let per_filter = spec
        .filters
        .iter()
        .enumerate()
        .map(|(j, f)| (*f, verdicts.iter().filter(|v| v[j]).count()))
        .collect();
    let matched_idx: Vec<usize> = (0..all.len())
        .filter(|&i| verdicts[i].iter().all(|&b| b))
        .collect();
    let first_witness = matched_idx.first().map(|&i| all[i].clone());
    if let Some(w) = &first_witness {
        // Replay the predicates on the witness before handing it out.
        assert!(
            spec.filters.iter().all(|f| f.matches(w, limits)),
            "witness failed re-verification"
        );
    }
    Ok(FilterCounts {
        order: spec.order,
        total: all.len(),
        per_filter,
        matched: matched_idx.len(),
        first_witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    // Counts frozen from the row-by-row backtracking oracle in the
    // acceptance suite (orders 1..=5).
    const REDUCED_COUNTS: [usize; 5] = [1, 1, 1, 4, 56];

    #[test]
    fn reduced_counts_small_orders() {
        for (i, &expect) in REDUCED_COUNTS.iter().enumerate() {
            let n = i + 1;
            assert_eq!(reduced_loops(n).len(), expect, "order {n}");
            assert_eq!(reduced_loops_seq(n).len(), expect, "order {n} seq");
        }
    }

    #[test]
    fn emitted_tables_are_normalized_and_distinct() {
        let loops = reduced_loops(5);
        for t in &loops {
            assert_eq!(t.identity(), 0);
            assert_eq!(t.rows()[0], (0..5).collect::<Vec<_>>());
            assert_eq!((0..5).map(|x| t.mul(x, 0)).collect::<Vec<_>>(), (0..5).collect::<Vec<_>>());
        }
        let mut dedup = loops.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), loops.len());
    }

    #[test]
    fn deterministic_and_sorted_output() {
        let a = reduced_loops(5);
        let b = reduced_loops(5);
        assert_eq!(a, b);
        let mut sorted = a.clone();
        sorted.sort();
        assert_eq!(a, sorted, "emission order is lexicographic");
        assert_eq!(a, reduced_loops_seq(5));
    }

    #[test]
    fn unnormalized_enumeration_counts() {
        // Relabeling bijects loops with identity e onto normalized ones.
        let limits = Limits::default();
        for n in [3usize, 4] {
            let spec = EnumSpec {
                order: n,
                normalized: false,
                filters: Vec::new(),
                limit: None,
            };
            let all = enumerate_loops(&spec, &limits).unwrap();
            assert_eq!(all.len(), n * REDUCED_COUNTS[n - 1]);
        }
    }

    #[test]
    fn limit_truncates_canonical_order() {
        let limits = Limits::default();
        let spec = EnumSpec {
            limit: Some(10),
            ..EnumSpec::normalized(5)
        };
        let some = enumerate_loops(&spec, &limits).unwrap();
        assert_eq!(some, reduced_loops(5)[..10].to_vec());
    }

    #[test]
    fn bounds_are_enforced() {
        let limits = Limits::default();
        assert!(matches!(
            enumerate_loops(&EnumSpec::normalized(7), &limits),
            Err(EnumError::BoundExceeded { order: 7, .. })
        ));
        let spec = EnumSpec {
            limit: Some(1),
            ..EnumSpec::normalized(9)
        };
        assert!(enumerate_loops(&spec, &limits).is_err());
        let spec = EnumSpec {
            limit: Some(1),
            ..EnumSpec::normalized(7)
        };
        assert_eq!(enumerate_loops(&spec, &limits).unwrap().len(), 1);
    }

    #[test]
    fn filter_identity_when_empty() {
        let limits = Limits::default();
        let counts = filter_count(&EnumSpec::normalized(4), &limits).unwrap();
        assert_eq!(counts.total, 4);
        assert_eq!(counts.matched, 4);
    }

    #[test]
    fn order_four_has_no_nonassociative_loop() {
        let limits = Limits::default();
        let spec = EnumSpec {
            filters: vec![Filter::Nonassociative],
            ..EnumSpec::normalized(4)
        };
        let counts = filter_count(&spec, &limits).unwrap();
        assert_eq!(counts.matched, 0);
        assert!(counts.first_witness.is_none());
    }

    #[test]
    fn order_five_nonassociative_witness_replays() {
        let limits = Limits::default();
        let spec = EnumSpec {
            filters: vec![Filter::Nonassociative],
            ..EnumSpec::normalized(5)
        };
        let counts = filter_count(&spec, &limits).unwrap();
        assert!(counts.matched > 0);
        let w = counts.first_witness.unwrap();
        let (x, y, z) = w.associativity_violation().unwrap();
        assert_ne!(w.mul(w.mul(x, y), z), w.mul(x, w.mul(y, z)));
    }
}
