//! Growth of the certified coupling time with `n`.
//!
//! The certificate runs on the continuous-time chain; its cost in discrete
//! steps is the number of updates consumed before certification, which is
//! what gets regressed on `n ln n`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::record::{ExperimentRecord, Summarize};
use crate::dynamics::{coupling_certificate, sample_update_stream, t_coup_exhaustive};
use crate::error::{Error, Result};
use crate::hypergraph::generate_random_regular;
use crate::rng::derive_seed;
use crate::stats::{linear_fit, median_with_censoring, LinearFit};

/// Stream length used when none is given: generous against the
/// `O(log n)` continuous-time coalescence.
pub fn default_horizon(n: usize) -> f64 {
    20.0 * ((n as f64) + 1.0).ln() + 40.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MixingScalingParams {
    pub k: usize,
    /// Degree of the generated regular instances.
    pub max_degree: usize,
    pub n_grid: Vec<usize>,
    pub replicas: usize,
    pub seed: u64,
    /// Fixed stream horizon; `None` uses [`default_horizon`].
    pub horizon: Option<f64>,
    /// Also run the exhaustive oracle when `|Omega|` is at most this.
    pub exhaustive_cap: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MixingReplica {
    pub n: usize,
    pub replica: usize,
    pub graph_seed: u64,
    pub stream_seed: u64,
    pub horizon: f64,
    pub certified_time: Option<f64>,
    pub certified_steps: Option<usize>,
    pub exhaustive_time: Option<f64>,
    pub exhaustive_steps: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MixingSummaryRow {
    pub n: usize,
    pub n_ln_n: f64,
    pub replicas: usize,
    pub uncertified: usize,
    pub median_certified_time: Option<f64>,
    pub median_certified_steps: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MixingSummary {
    pub rows: Vec<MixingSummaryRow>,
    /// `median_certified_steps ~ intercept + slope * n ln n`
    pub fit: Option<LinearFit>,
    pub flags: Vec<String>,
}

pub type MixingScalingRecord = ExperimentRecord<MixingScalingParams, MixingReplica, MixingSummary>;

impl Summarize for MixingScalingRecord {
    type Params = MixingScalingParams;
    type Replica = MixingReplica;
    type Summary = MixingSummary;

    fn summarize(params: &MixingScalingParams, replicas: &[MixingReplica]) -> MixingSummary {
        let mut flags = Vec::new();
        let rows: Vec<MixingSummaryRow> = params
            .n_grid
            .iter()
            .map(|&n| {
                let reps: Vec<&MixingReplica> = replicas.iter().filter(|r| r.n == n).collect();
                let times: Vec<Option<f64>> = reps.iter().map(|r| r.certified_time).collect();
                let steps: Vec<Option<f64>> = reps
                    .iter()
                    .map(|r| r.certified_steps.map(|s| s as f64))
                    .collect();
                MixingSummaryRow {
                    n,
                    n_ln_n: n as f64 * (n as f64).ln(),
                    replicas: reps.len(),
                    uncertified: times.iter().filter(|t| t.is_none()).count(),
                    median_certified_time: median_with_censoring(&times),
                    median_certified_steps: median_with_censoring(&steps),
                }
            })
            .collect();
        if rows.iter().any(|r| r.uncertified > 0) {
            flags.push("some replicas not certified by horizon".to_string());
        }
        let points: Vec<(f64, f64)> = rows
            .iter()
            .filter_map(|r| r.median_certified_steps.map(|s| (r.n_ln_n, s)))
            .collect();
        let (x, y): (Vec<f64>, Vec<f64>) = points.into_iter().unzip();
        let fit = linear_fit(&x, &y);
        if fit.is_none() {
            flags.push("insufficient grid".to_string());
        }
        MixingSummary { rows, fit, flags }
    }
}

/// For every `n` in the grid and every replica: draw a `max_degree`-regular
/// `k`-uniform hypergraph and an update stream, then record the certified
/// (and optionally exhaustive) coupling time.
pub fn mixing_scaling(params: &MixingScalingParams) -> Result<MixingScalingRecord> {
    if params.n_grid.is_empty() || params.replicas == 0 {
        return Err(Error::InvalidArgument(
            "need a nonempty n grid and at least one replica".into(),
        ));
    }
    let jobs: Vec<(usize, usize, usize)> = params
        .n_grid
        .iter()
        .enumerate()
        .flat_map(|(gi, &n)| (0..params.replicas).map(move |r| (gi, n, r)))
        .collect();
    let replicas: Vec<MixingReplica> = jobs
        .par_iter()
        .map(|&(gi, n, r)| {
            let job = (gi * params.replicas + r) as u64;
            let graph_seed = derive_seed(params.seed, 2 * job);
            let stream_seed = derive_seed(params.seed, 2 * job + 1);
            let g = generate_random_regular(n, params.max_degree, params.k, graph_seed)?;
            let horizon = params.horizon.unwrap_or_else(|| default_horizon(n));
            let stream = sample_update_stream(n, horizon, stream_seed);
            let cert = coupling_certificate(&g, &stream).certified;
            let exhaustive = match params.exhaustive_cap {
                Some(cap) => match t_coup_exhaustive(&g, &stream, cap) {
                    Ok(t) => Some(t),
                    Err(e) if e.is_resource() => None,
                    Err(e) => return Err(e),
                },
                None => None,
            };
            Ok(MixingReplica {
                n,
                replica: r,
                graph_seed,
                stream_seed,
                horizon,
                certified_time: cert.time(),
                certified_steps: cert.events(),
                exhaustive_time: exhaustive.and_then(|t| t.time()),
                exhaustive_steps: exhaustive.and_then(|t| t.events()),
            })
        })
        .collect::<Result<_>>()?;
    let summary = MixingScalingRecord::summarize(params, &replicas);
    Ok(ExperimentRecord::new(
        "mix-scaling",
        params.clone(),
        replicas,
        summary,
    ))
}
