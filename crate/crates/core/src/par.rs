//! Order-preserving data-parallel helpers.
//!
//! With the `parallel` feature these fan out over rayon's pool; without it they
//! run on the calling thread. Results never depend on the worker count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Applies `f` to every item, returning results in input order.
#[cfg(feature = "parallel")]
pub(crate) fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}

/// Folds `items` with an associative, commutative `op`.
#[cfg(feature = "parallel")]
pub(crate) fn reduce<T, F>(items: Vec<T>, identity: impl Fn() -> T + Sync + Send, op: F) -> T
where
    T: Send,
    F: Fn(T, T) -> T + Sync + Send,
{
    items.into_par_iter().reduce(identity, op)
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn reduce<T, F>(items: Vec<T>, identity: impl Fn() -> T + Sync + Send, op: F) -> T
where
    T: Send,
    F: Fn(T, T) -> T + Sync + Send,
{
    items.into_iter().fold(identity(), op)
}
