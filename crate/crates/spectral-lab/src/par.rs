//! Data-parallel helpers.
//!
//! With the `parallel` feature (default) the bulk loops — grid sweeps over
//! coupling constants, heat-kernel evaluation over time grids, per-edge
//! factorizations — run on rayon. Without it everything falls back to plain
//! sequential iterators, which is also the baseline the benchmark suite
//! compares against.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map over a slice, in parallel when the `parallel` feature is enabled.
#[cfg(feature = "parallel")]
pub fn map<T: Sync, U: Send, F: Fn(&T) -> U + Sync>(items: &[T], f: F) -> Vec<U> {
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, U, F: Fn(&T) -> U>(items: &[T], f: F) -> Vec<U> {
    items.iter().map(f).collect()
}

/// Map over an index range, in parallel when the `parallel` feature is enabled.
#[cfg(feature = "parallel")]
pub fn map_range<U: Send, F: Fn(usize) -> U + Sync>(n: usize, f: F) -> Vec<U> {
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_range<U, F: Fn(usize) -> U>(n: usize, f: F) -> Vec<U> {
    (0..n).map(f).collect()
}

/// Sequential map with the same shape as [`map`]. The criterion benches use
/// this as the single-thread baseline regardless of enabled features.
pub fn map_seq<T, U, F: Fn(&T) -> U>(items: &[T], f: F) -> Vec<U> {
    items.iter().map(f).collect()
}

/// Bound the worker count for subsequent parallel sections. `jobs = 0` keeps
/// the default (one worker per core). Returns an error message when the pool
/// was already initialized with a different size.
#[cfg(feature = "parallel")]
pub fn limit_workers(jobs: usize) -> std::result::Result<(), String> {
    if jobs == 0 {
        return Ok(());
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build_global()
        .map_err(|e| e.to_string())
}

#[cfg(not(feature = "parallel"))]
pub fn limit_workers(_jobs: usize) -> std::result::Result<(), String> {
    Ok(())
}
