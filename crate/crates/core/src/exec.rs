//! Chunked map helpers shared by the likelihood evaluator and the dataset
//! generator.
//!
//! Work is always split into fixed-size chunks and the per-chunk results are
//! folded in chunk order, so the parallel and sequential paths produce
//! bit-identical floating-point results regardless of thread count.

/// Fixed chunk width for per-record reductions.
pub(crate) const CHUNK: usize = 512;

/// Maps `f` over fixed-size chunks of `items`, sequentially.
pub(crate) fn map_chunks_seq<T: Sync, R: Send, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&[T]) -> R + Sync,
{
    items.chunks(CHUNK).map(|c| f(c)).collect()
}

/// Maps `f` over fixed-size chunks of `items` on the rayon pool. Results come
/// back in chunk order.
#[cfg(feature = "parallel")]
pub(crate) fn map_chunks_par<T: Sync, R: Send, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&[T]) -> R + Sync,
{
    use rayon::prelude::*;
    items.par_chunks(CHUNK).map(|c| f(c)).collect()
}

/// Feature-dispatched chunk map: parallel when the `parallel` feature is on,
/// sequential otherwise.
pub(crate) fn map_chunks<T: Sync, R: Send, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&[T]) -> R + Sync,
{
    #[cfg(feature = "parallel")]
    {
        map_chunks_par(items, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_chunks_seq(items, f)
    }
}

/// Runs one closure per index, collecting results in index order; parallel
/// when the feature is on. Used for independently seeded units of work such
/// as chains and generator blocks.
pub(crate) fn map_indices<R: Send, F>(n: usize, f: F) -> Vec<R>
where
    F: Fn(usize) -> R + Sync,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}
