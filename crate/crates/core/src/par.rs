//! Data-parallel sweeps with a sequential fallback.
//!
//! With the `parallel` feature the sweeps run on rayon and collect in input
//! order, so results are identical to the sequential build bit for bit.

use crate::error::Result;

#[cfg(feature = "parallel")]
pub(crate) fn map_collect<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_collect<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    F: Fn(T) -> R,
{
    items.into_iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub(crate) fn configure_threads(n: usize) -> Result<()> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|_| crate::error::Error::ThreadPool)
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn configure_threads(_n: usize) -> Result<()> {
    Ok(())
}
