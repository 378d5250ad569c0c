//! Deterministic fork-join helper for the verification suites.

use std::env;
use std::thread;

/// Worker count: the `KMAJ_THREADS` environment variable when set to a
/// positive integer, otherwise the available parallelism.
pub(crate) fn thread_count() -> usize {
    match env::var("KMAJ_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        Some(n) if n >= 1 => n,
        _ => thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1),
    }
}

/// Map `f` over `items` on up to `threads` workers. Items are split into
/// contiguous chunks and results concatenated in chunk order, so the output
/// order always matches the input order regardless of the worker count.
pub(crate) fn shard_map<T, R, F>(items: Vec<T>, threads: usize, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync,
{
    let len = items.len();
    let threads = threads.max(1).min(len.max(1));
    if threads <= 1 {
        return items.into_iter().map(f).collect();
    }
    let chunk_size = len.div_ceil(threads);
    let mut chunks: Vec<Vec<T>> = Vec::with_capacity(threads);
    let mut it = items.into_iter();
    loop {
        let chunk: Vec<T> = it.by_ref().take(chunk_size).collect();
        if chunk.is_empty() {
            break;
        }
        chunks.push(chunk);
    }
    let f = &f;
    thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .into_iter()
            .map(|chunk| scope.spawn(move || chunk.into_iter().map(f).collect::<Vec<R>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("suite worker panicked"))
            .collect()
    })
}
