//! Sampling-based counts against exact counts on a suite of small instances.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::record::{ExperimentRecord, Summarize};
use crate::counting::{exact_count, fpras_count, FprasConfig};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::rng::derive_seed;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FprasAccuracyParams {
    pub instances: Vec<String>,
    pub epsilon: f64,
    pub repetitions: usize,
    pub seed: u64,
    pub config: FprasConfig,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FprasAccuracyReplica {
    pub instance: String,
    pub n: usize,
    pub repetition: usize,
    pub seed: u64,
    pub exact: f64,
    pub estimate: f64,
    pub relative_error: f64,
    pub within: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FprasInstanceSummary {
    pub instance: String,
    pub exact: f64,
    pub fraction_within: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FprasAccuracySummary {
    pub instances: Vec<FprasInstanceSummary>,
    pub all_pass: bool,
}

pub type FprasAccuracyRecord =
    ExperimentRecord<FprasAccuracyParams, FprasAccuracyReplica, FprasAccuracySummary>;

impl Summarize for FprasAccuracyRecord {
    type Params = FprasAccuracyParams;
    type Replica = FprasAccuracyReplica;
    type Summary = FprasAccuracySummary;

    fn summarize(
        params: &FprasAccuracyParams,
        reps: &[FprasAccuracyReplica],
    ) -> FprasAccuracySummary {
        let instances: Vec<FprasInstanceSummary> = params
            .instances
            .iter()
            .map(|name| {
                let rows: Vec<&FprasAccuracyReplica> =
                    reps.iter().filter(|r| &r.instance == name).collect();
                let within = rows.iter().filter(|r| r.within).count();
                let fraction_within = if rows.is_empty() {
                    0.0
                } else {
                    within as f64 / rows.len() as f64
                };
                FprasInstanceSummary {
                    instance: name.clone(),
                    exact: rows.first().map_or(f64::NAN, |r| r.exact),
                    fraction_within,
                    pass: 4 * within >= 3 * rows.len() && !rows.is_empty(),
                }
            })
            .collect();
        let all_pass = instances.iter().all(|i| i.pass);
        FprasAccuracySummary {
            instances,
            all_pass,
        }
    }
}

/// Runs the estimator `repetitions` times on every named instance and
/// compares with the exact count.
pub fn fpras_accuracy(
    suite: &[(String, Hypergraph)],
    epsilon: f64,
    repetitions: usize,
    seed: u64,
    config: &FprasConfig,
) -> Result<FprasAccuracyRecord> {
    if suite.is_empty() || repetitions == 0 {
        return Err(Error::InvalidArgument(
            "need a nonempty suite and at least one repetition".into(),
        ));
    }
    let exact: Vec<f64> = suite
        .iter()
        .map(|(_, g)| exact_count(g).map(|z| z.value as f64))
        .collect::<Result<_>>()?;
    let jobs: Vec<(usize, usize)> = (0..suite.len())
        .flat_map(|i| (0..repetitions).map(move |r| (i, r)))
        .collect();
    let replicas: Vec<FprasAccuracyReplica> = jobs
        .par_iter()
        .map(|&(i, r)| {
            let (name, g) = &suite[i];
            let s = derive_seed(seed, (i * repetitions + r) as u64);
            let est = fpras_count(g, epsilon, s, config)?;
            let rel = (est.value / exact[i] - 1.0).abs();
            Ok(FprasAccuracyReplica {
                instance: name.clone(),
                n: g.n(),
                repetition: r,
                seed: s,
                exact: exact[i],
                estimate: est.value,
                relative_error: rel,
                within: rel < epsilon,
            })
        })
        .collect::<Result<_>>()?;
    let params = FprasAccuracyParams {
        instances: suite.iter().map(|(name, _)| name.clone()).collect(),
        epsilon,
        repetitions,
        seed,
        config: *config,
    };
    let summary = FprasAccuracyRecord::summarize(&params, &replicas);
    Ok(ExperimentRecord::new(
        "fpras-accuracy",
        params,
        replicas,
        summary,
    ))
}
