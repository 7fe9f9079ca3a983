//! Empirical activation and susceptibility frequencies against their
//! analytic bounds over a grid of `(k, Delta)`.

use serde::{Deserialize, Serialize};

use super::record::{ExperimentRecord, Summarize};
use crate::error::{Error, Result};
use crate::hypergraph::generate_random_regular;
use crate::percolation::estimate_activation_prob;
use crate::rng::derive_seed;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PercolationSweepParams {
    pub k_range: Vec<usize>,
    pub degree_range: Vec<usize>,
    pub trials: u64,
    pub seed: u64,
    /// Block of the probed site; the susceptible probe uses the next block.
    pub block: usize,
}

impl PercolationSweepParams {
    pub fn default_grid(trials: u64, seed: u64) -> Self {
        PercolationSweepParams {
            k_range: (3..=8).collect(),
            degree_range: vec![2, 3],
            trials,
            seed,
            block: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PercolationCell {
    pub k: usize,
    pub max_degree: usize,
    pub n: usize,
    pub graph_seed: u64,
    pub trial_seed: u64,
    pub trials: u64,
    pub active_mean: f64,
    pub active_stderr: f64,
    pub active_bound: f64,
    pub susceptible_mean: f64,
    pub susceptible_stderr: f64,
    pub susceptible_bound: f64,
    pub pass: bool,
}

impl PercolationCell {
    fn passes(&self) -> bool {
        self.active_mean <= self.active_bound + 3.0 * self.active_stderr
            && self.susceptible_mean <= self.susceptible_bound + 3.0 * self.susceptible_stderr
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PercolationSweepSummary {
    pub cells: usize,
    pub passed: usize,
    pub all_pass: bool,
}

pub type PercolationSweepRecord =
    ExperimentRecord<PercolationSweepParams, PercolationCell, PercolationSweepSummary>;

impl Summarize for PercolationSweepRecord {
    type Params = PercolationSweepParams;
    type Replica = PercolationCell;
    type Summary = PercolationSweepSummary;

    fn summarize(_: &PercolationSweepParams, cells: &[PercolationCell]) -> PercolationSweepSummary {
        let passed = cells.iter().filter(|c| c.passes()).count();
        PercolationSweepSummary {
            cells: cells.len(),
            passed,
            all_pass: passed == cells.len(),
        }
    }
}

/// One cell per `(k, Delta)`: a `Delta`-regular `k`-uniform hypergraph on
/// `3k` vertices, probed at its first edge.
pub fn percolation_sweep(params: &PercolationSweepParams) -> Result<PercolationSweepRecord> {
    if params.trials == 0 || params.block == 0 {
        return Err(Error::InvalidArgument(
            "need at least one trial and block >= 1".into(),
        ));
    }
    let mut cells = Vec::new();
    for (ki, &k) in params.k_range.iter().enumerate() {
        for (di, &d) in params.degree_range.iter().enumerate() {
            let cell = (ki * params.degree_range.len() + di) as u64;
            let graph_seed = derive_seed(params.seed, 2 * cell);
            let trial_seed = derive_seed(params.seed, 2 * cell + 1);
            let n = 3 * k;
            let g = generate_random_regular(n, d, k, graph_seed)?;
            let est = estimate_activation_prob(&g, 0, params.block, params.trials, trial_seed)?;
            let mut c = PercolationCell {
                k,
                max_degree: d,
                n,
                graph_seed,
                trial_seed,
                trials: params.trials,
                active_mean: est.active.mean,
                active_stderr: est.active.stderr,
                active_bound: est.active_bound,
                susceptible_mean: est.susceptible_next.mean,
                susceptible_stderr: est.susceptible_next.stderr,
                susceptible_bound: est.susceptible_bound,
                pass: false,
            };
            c.pass = c.passes();
            cells.push(c);
        }
    }
    let summary = PercolationSweepRecord::summarize(params, &cells);
    Ok(ExperimentRecord::new(
        "perc-sweep",
        params.clone(),
        cells,
        summary,
    ))
}
