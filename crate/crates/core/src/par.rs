//! Order-independent map-reduce over `0..count`, parallel when `std` is enabled.

#[cfg(feature = "std")]
pub(crate) fn map_reduce<R, M, F>(count: usize, map: M, identity: fn() -> R, reduce: F) -> R
where
    R: Send,
    M: Fn(usize) -> R + Sync + Send,
    F: Fn(R, R) -> R + Sync + Send,
{
    use rayon::prelude::*;
    (0..count).into_par_iter().map(map).reduce(identity, reduce)
}

#[cfg(not(feature = "std"))]
pub(crate) fn map_reduce<R, M, F>(count: usize, map: M, identity: fn() -> R, reduce: F) -> R
where
    M: Fn(usize) -> R,
    F: Fn(R, R) -> R,
{
    (0..count).map(map).fold(identity(), reduce)
}
