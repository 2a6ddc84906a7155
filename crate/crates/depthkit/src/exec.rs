//! Execution layer: data-parallel map with a sequential fallback.
//!
//! All batch evaluation in this crate funnels through [`map_indices`]. With
//! the `parallel` feature (default) it fans out over rayon; without it the
//! same closure runs on a plain iterator. Results are collected in index
//! order, so output is identical for any worker count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Applies `f` to `0..n`, collecting results in index order.
pub fn map_indices<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Sequential twin of [`map_indices`].
///
/// Always single-threaded, regardless of features; the criterion benches use
/// it as the baseline against the parallel path, and timing-sensitive tests
/// use it to keep measurements free of scheduling noise.
pub fn map_indices_seq<U, F>(n: usize, f: F) -> Vec<U>
where
    F: Fn(usize) -> U,
{
    (0..n).map(f).collect()
}
