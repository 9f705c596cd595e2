//! Parallel brute-force averages.

use askzeta_core::linmat::LinearFormMatrix;
use askzeta_core::oracle::{check_budget, tally_range, AskAverage, KernelTally, OracleError};
use rayon::prelude::*;

/// Oracle budget from `ASKZETA_BUDGET`, if set and valid.
pub fn env_budget() -> Option<u64> {
    std::env::var("ASKZETA_BUDGET").ok()?.trim().parse().ok()
}

/// `ask_average` with the index range split into independent chunks.
pub fn ask_average_parallel(a: &LinearFormMatrix, p: u64, k: u32, budget: u64) -> Result<AskAverage, OracleError> {
    let points = check_budget(a, p, k, budget)?;
    let chunks = (rayon::current_num_threads() as u64 * 8).clamp(1, points.max(1));
    let step = points.div_ceil(chunks).max(1);
    let parts: Vec<KernelTally> = (0..chunks)
        .into_par_iter()
        .map(|i| {
            let start = (i * step).min(points);
            let end = ((i + 1) * step).min(points);
            tally_range(a, p, k, start, end)
        })
        .collect::<Result<_, _>>()?;
    let mut tally = KernelTally::default();
    for part in &parts {
        tally.merge(part);
    }
    Ok(AskAverage::from_tally(a, p, k, tally))
}

/// Runs `f` on a pool of `jobs` workers, or on the global pool.
pub fn with_jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}
