//! Internal loop runners that fan out over rayon when the `parallel`
//! feature is enabled and fall back to plain iteration otherwise.
//!
//! Only loops whose work units are independent and internally sequential
//! are routed through here (matrix product rows, per-cluster eigensolves,
//! candidate updates in orthonormal completion). Each unit performs its
//! own floating-point operations in a fixed order, so the results are
//! bit-identical with and without the feature.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Runs `f(i, chunk_i)` over consecutive `chunk`-sized pieces of `data`.
pub fn for_each_chunk<T, F>(data: &mut [T], chunk: usize, f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync + Send,
{
    if data.is_empty() || chunk == 0 {
        return;
    }
    #[cfg(feature = "parallel")]
    data.par_chunks_mut(chunk)
        .enumerate()
        .for_each(|(i, c)| f(i, c));
    #[cfg(not(feature = "parallel"))]
    data.chunks_mut(chunk).enumerate().for_each(|(i, c)| f(i, c));
}

/// Collects `f(0), …, f(n-1)` in index order.
pub fn map_collect<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
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
