//! Execution strategy for the data-parallel core.
//!
//! With the `parallel` feature (on by default) independent work items run on
//! the rayon thread pool; without it, or inside [`force_sequential`], they run
//! on the calling thread. Both paths preserve item order, and the library's
//! operation counts are accumulated per item and summed afterwards, so results
//! and counts are bit-identical across strategies.

use std::cell::Cell;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

thread_local! {
    static FORCE_SEQUENTIAL: Cell<bool> = const { Cell::new(false) };
}

/// Run `f` with the parallel execution path disabled on this thread, even when
/// the `parallel` feature is compiled in. Used by the benchmarks to compare
/// both strategies within one binary, and restored on exit (including panic
/// unwinding is not required here: the flag is thread-local and the guard
/// restores it on drop).
pub fn force_sequential<R>(f: impl FnOnce() -> R) -> R {
    struct Guard(bool);
    impl Drop for Guard {
        fn drop(&mut self) {
            FORCE_SEQUENTIAL.with(|c| c.set(self.0));
        }
    }
    let prev = FORCE_SEQUENTIAL.with(|c| c.replace(true));
    let _guard = Guard(prev);
    f()
}

/// True when work on this thread must run sequentially.
pub fn sequential_forced() -> bool {
    FORCE_SEQUENTIAL.with(|c| c.get())
}

/// Map `f` over `items`, preserving order.
///
/// Runs on the rayon pool when the `parallel` feature is enabled and
/// [`force_sequential`] is not active on this thread.
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if !sequential_forced() {
            return items.into_par_iter().map(f).collect();
        }
    }
    items.into_iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_order() {
        let out = map_collect((0..100).collect::<Vec<_>>(), |x| x * x);
        assert_eq!(out, (0..100).map(|x| x * x).collect::<Vec<_>>());
    }

    #[test]
    fn sequential_override_matches() {
        let par = map_collect((0..50).collect::<Vec<_>>(), |x| x + 1);
        let seq = force_sequential(|| map_collect((0..50).collect::<Vec<_>>(), |x| x + 1));
        assert_eq!(par, seq);
        assert!(!sequential_forced());
    }
}
