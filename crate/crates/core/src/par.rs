//! Switches between rayon and plain iterators.
//!
//! Every helper produces the same output in both modes; parallelism only
//! changes how the work is scheduled. Without the `parallel` feature the
//! flag is ignored.

/// Frontiers smaller than this are always processed sequentially.
pub const MIN_PARALLEL_LEN: usize = 256;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[inline]
#[cfg(feature = "parallel")]
fn go_parallel(parallel: bool, len: usize) -> bool {
    parallel && len >= MIN_PARALLEL_LEN
}

pub fn map<T, U, F>(items: &[T], parallel: bool, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if go_parallel(parallel, items.len()) {
        return items.par_iter().map(f).collect();
    }
    let _ = parallel;
    items.iter().map(f).collect()
}

pub fn flat_map<T, U, F>(items: &[T], parallel: bool, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Vec<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if go_parallel(parallel, items.len()) {
        return items.par_iter().flat_map_iter(f).collect();
    }
    let _ = parallel;
    items.iter().flat_map(f).collect()
}

pub fn sort_unstable<T: Ord + Send>(items: &mut [T], parallel: bool) {
    #[cfg(feature = "parallel")]
    if go_parallel(parallel, items.len()) {
        items.par_sort_unstable();
        return;
    }
    let _ = parallel;
    items.sort_unstable();
}

/// First index in `lo..hi` satisfying `pred`.
pub fn find_first<F>(lo: u64, hi: u64, parallel: bool, pred: F) -> Option<u64>
where
    F: Fn(u64) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if go_parallel(parallel, (hi - lo) as usize) {
        return (lo..hi).into_par_iter().find_first(|&i| pred(i));
    }
    let _ = parallel;
    (lo..hi).find(|&i| pred(i))
}

/// Runs `a` and `b`, possibly concurrently.
pub fn join<A, B, RA, RB>(parallel: bool, a: A, b: B) -> (RA, RB)
where
    A: FnOnce() -> RA + Send,
    B: FnOnce() -> RB + Send,
    RA: Send,
    RB: Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return rayon::join(a, b);
    }
    let _ = parallel;
    (a(), b())
}

/// Like [`flat_map`] but parallel for any length; meant for a few coarse tasks.
pub fn flat_map_coarse<T, U, F>(items: &[T], parallel: bool, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Vec<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel && items.len() > 1 {
        return items.par_iter().with_max_len(1).flat_map_iter(f).collect();
    }
    let _ = parallel;
    items.iter().flat_map(f).collect()
}

/// Sizes the global rayon pool. Only the first call takes effect; without
/// the `parallel` feature this does nothing.
pub fn set_threads(n: usize) {
    #[cfg(feature = "parallel")]
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    let _ = n;
}

/// Applies `f(index, chunk)` to consecutive `chunk_len`-sized chunks of `buf`.
pub fn map_chunks_mut<T, R, F>(buf: &mut [T], chunk_len: usize, parallel: bool, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(usize, &mut [T]) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if go_parallel(parallel, buf.len() / chunk_len.max(1)) {
        return buf
            .par_chunks_mut(chunk_len)
            .enumerate()
            .map(|(i, c)| f(i, c))
            .collect();
    }
    let _ = parallel;
    buf.chunks_mut(chunk_len)
        .enumerate()
        .map(|(i, c)| f(i, c))
        .collect()
}

pub fn sort_unstable_by<T, F>(items: &mut [T], parallel: bool, cmp: F)
where
    T: Send,
    F: Fn(&T, &T) -> std::cmp::Ordering + Sync,
{
    #[cfg(feature = "parallel")]
    if go_parallel(parallel, items.len()) {
        items.par_sort_unstable_by(cmp);
        return;
    }
    let _ = parallel;
    items.sort_unstable_by(cmp);
}
