//! Thread-budget plumbing.
//!
//! Every data-parallel loop in the crate goes through [`Threads`]. With the
//! `parallel` feature enabled and a budget above one, work runs on a cached
//! rayon pool of exactly that size; otherwise it runs on the calling thread.
//! Results are always assembled in index order, so output never depends on
//! the schedule.

#[cfg(feature = "parallel")]
use std::{
    collections::HashMap,
    sync::{Arc, Mutex, OnceLock},
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Threads(usize);

impl Default for Threads {
    fn default() -> Self {
        Self::all()
    }
}

impl Threads {
    pub fn new(n: usize) -> Self {
        Threads(n.max(1))
    }

    pub fn sequential() -> Self {
        Threads(1)
    }

    pub fn all() -> Self {
        Threads(
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1),
        )
    }

    pub fn count(self) -> usize {
        self.0
    }

    fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self.0 > 1
    }

    /// `(0..n).map(f)` collected in index order.
    pub fn map<T, F>(self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        if !self.is_parallel() {
            return (0..n).map(f).collect();
        }
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            pool(self.0).install(|| (0..n).into_par_iter().map(f).collect())
        }
        #[cfg(not(feature = "parallel"))]
        unreachable!()
    }

    /// Concatenation of `f(0), f(1), ..` in index order.
    pub fn flat_map<T, F>(self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> Vec<T> + Sync + Send,
    {
        self.map(n, f).into_iter().flatten().collect()
    }

    /// First index (in index order) for which `f` returns `Some`.
    pub fn find_first<T, F>(self, n: usize, f: F) -> Option<T>
    where
        T: Send,
        F: Fn(usize) -> Option<T> + Sync + Send,
    {
        if !self.is_parallel() {
            return (0..n).find_map(f);
        }
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            pool(self.0).install(|| (0..n).into_par_iter().find_map_first(f))
        }
        #[cfg(not(feature = "parallel"))]
        unreachable!()
    }

    pub fn sort<T: Ord + Send>(self, v: &mut [T]) {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return pool(self.0).install(|| v.par_sort_unstable());
        }
        v.sort_unstable();
    }
}

#[cfg(feature = "parallel")]
fn pool(n: usize) -> Arc<rayon::ThreadPool> {
    static POOLS: OnceLock<Mutex<HashMap<usize, Arc<rayon::ThreadPool>>>> = OnceLock::new();
    let mut pools = POOLS.get_or_init(Default::default).lock().unwrap();
    pools
        .entry(n)
        .or_insert_with(|| {
            Arc::new(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .expect("failed to build thread pool"),
            )
        })
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_schedule_independent() {
        let seq = Threads::sequential().flat_map(50, |i| vec![i; i % 3]);
        let par = Threads::new(4).flat_map(50, |i| vec![i; i % 3]);
        assert_eq!(seq, par);
        assert_eq!(
            Threads::new(4).find_first(100, |i| (i % 17 == 16).then_some(i)),
            Some(16)
        );
    }
}
