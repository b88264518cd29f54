//! Benchmark harness: instance files, generators, runners and CSV output.

pub mod gen;
pub mod instance;
pub mod record;
pub mod run;
pub mod selftest;

use crate::error::{DpError, Result};

/// Runs `f` on a dedicated fork-join pool of `threads` workers.
pub fn with_threads<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> Result<R> {
    if threads == 0 {
        return Err(DpError::invalid("thread count must be at least 1"));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| DpError::Internal(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

/// Hardware threads available to this process.
pub fn available_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}
