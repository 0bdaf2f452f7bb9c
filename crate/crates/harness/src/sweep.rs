//! Parallel verification over a corpus.

use rayon::prelude::*;
use tk5kit_core::{Error, Graph, Result};

use crate::discover::statement_inputs;
use crate::verdict::{Statement, StatementInput, Verdict};
use crate::verify::{verify, VerifyOptions};

/// Environment variable read when no thread count is given.
pub const THREADS_ENV: &str = "TK5KIT_THREADS";

/// One verification: graph id, graph and input.
pub type Job = (String, Graph, StatementInput);

/// Explicit count, else `TK5KIT_THREADS`, else rayon's default (0).
pub fn thread_count(explicit: Option<usize>) -> usize {
    explicit
        .or_else(|| {
            std::env::var(THREADS_ENV)
                .ok()
                .and_then(|s| s.trim().parse().ok())
        })
        .unwrap_or(0)
}

/// Runs every job. The result is sorted the same way reports are, so it
/// does not depend on the thread count.
pub fn run_jobs(
    jobs: &[Job],
    opts: &VerifyOptions,
    threads: Option<usize>,
) -> Result<Vec<Verdict>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(thread_count(threads))
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    let results: Vec<Result<Verdict>> = pool.install(|| {
        jobs.par_iter()
            .map(|(id, g, input)| verify(id, g, input, opts))
            .collect()
    });
    let mut out = results.into_iter().collect::<Result<Vec<_>>>()?;
    out.sort_by_cached_key(|v| (v.graph_id.clone(), v.statement(), v.input.sort_key()));
    Ok(out)
}

/// Discovers up to `cap` inputs per graph and statement, then runs them.
pub fn sweep(
    graphs: &[(String, Graph)],
    statements: &[Statement],
    cap: usize,
    opts: &VerifyOptions,
    threads: Option<usize>,
) -> Result<Vec<Verdict>> {
    let mut jobs = Vec::new();
    for (id, g) in graphs {
        for &st in statements {
            for input in statement_inputs(g, st, cap)? {
                jobs.push((id.clone(), g.clone(), input));
            }
        }
    }
    run_jobs(&jobs, opts, threads)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thread_count_is_irrelevant() {
        let g = Graph::complete(7).remove_edges([(5, 6)]);
        let graphs = vec![("k7e".to_string(), g)];
        let opts = VerifyOptions::default();
        let one = sweep(&graphs, &[Statement::Main], 4, &opts, Some(1)).unwrap();
        let four = sweep(&graphs, &[Statement::Main], 4, &opts, Some(4)).unwrap();
        assert_eq!(one, four);
        assert_eq!(one.len(), 4);
    }

    #[test]
    fn explicit_threads_win() {
        assert_eq!(thread_count(Some(3)), 3);
    }
}
