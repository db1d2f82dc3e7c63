//! Work distribution helpers.
//!
//! Every parallel loop in the crate goes through one of these functions.
//! With the `parallel` feature (the default) they fan out over rayon's
//! indexed parallel iterators, which preserve input order, so results are
//! identical to the sequential fallback regardless of worker count. The
//! `_seq` variants are always compiled and serve as the fallback bodies and
//! as benchmark baselines.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub(crate) fn map_range<U, F>(len: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    (0..len).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_range<U, F>(len: usize, f: F) -> Vec<U>
where
    F: Fn(usize) -> U,
{
    map_range_seq(len, f)
}

#[cfg_attr(feature = "parallel", allow(dead_code))]
pub(crate) fn map_range_seq<U, F>(len: usize, f: F) -> Vec<U>
where
    F: Fn(usize) -> U,
{
    (0..len).map(f).collect()
}

#[cfg(feature = "parallel")]
pub(crate) fn flat_map_vec<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> Vec<U> + Sync + Send,
{
    items.into_par_iter().flat_map_iter(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn flat_map_vec<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> Vec<U>,
{
    flat_map_vec_seq(items, f)
}

pub(crate) fn flat_map_vec_seq<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> Vec<U>,
{
    items.into_iter().flat_map(f).collect()
}

/// First `Some` produced over `0..len`, scanning slices in index order.
///
/// Workers may race ahead, but the result is reduced to the lowest index, so
/// the outcome matches the sequential scan exactly.
pub(crate) fn first_hit<U, F>(len: usize, f: F) -> Option<U>
where
    U: Send,
    F: Fn(usize) -> Option<U> + Sync + Send,
{
    map_range(len, f).into_iter().flatten().next()
}

pub(crate) fn first_hit_seq<U, F>(len: usize, f: F) -> Option<U>
where
    F: Fn(usize) -> Option<U>,
{
    // Genuinely lazy: stops at the first hit.
    (0..len).filter_map(f).next()
}
