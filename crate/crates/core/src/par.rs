//! Execution policy for the data-parallel inner loops.
//!
//! Every parallel entry point takes an [`Exec`]. With the `parallel` feature
//! disabled, [`Exec::Parallel`] silently degrades to the sequential path, so
//! callers never need their own `cfg` switches. Results are identical under
//! both policies; only wall-clock time differs.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// True when work will actually be spread over the rayon pool.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Maps `f` over `items`, preserving order.
#[allow(unused_variables)]
pub(crate) fn map<T, U, F>(exec: Exec, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if exec == Exec::Parallel {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
    }
    items.iter().map(f).collect()
}

/// Maps `f` over `0..len`, preserving order.
pub(crate) fn map_range<U, F>(exec: Exec, len: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    let idx: Vec<usize> = (0..len).collect();
    map(exec, &idx, |&i| f(i))
}
