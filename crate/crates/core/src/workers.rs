//! Worker-pool sizing for the parallel sweeps.

use std::num::NonZeroUsize;

pub const WORKERS_ENV: &str = "SPIN_CHAINS_WORKERS";

/// `SPIN_CHAINS_WORKERS` if set to a positive integer, otherwise the
/// available parallelism.
pub fn worker_count() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<NonZeroUsize>().ok())
        .map(NonZeroUsize::get)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(NonZeroUsize::get)
                .unwrap_or(1)
        })
}

/// Sizes rayon's global pool. Only the first call has an effect.
pub fn init_global_pool() {
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(worker_count())
        .build_global();
}
