//! Data-parallel helpers.
//!
//! With the `parallel` feature (default) the batch entry points fan out over
//! rayon's global pool; without it they fall back to plain sequential
//! iteration. Results are collected in input order either way, so output is
//! deterministic regardless of the feature.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `f` over `items`, preserving order.
#[cfg(feature = "parallel")]
pub fn map_vec<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_vec<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

/// Always-sequential variant, kept callable so benchmarks can compare the
/// two paths in a single build.
pub fn map_vec_sequential<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

/// True when this build actually parallelises `map_vec`.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
