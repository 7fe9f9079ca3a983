use rayon::prelude::*;
use serde::Serialize;

use super::{site_active, site_susceptible};
use crate::dynamics::sample_update_stream;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::rng::derive_seed;
use crate::stats::Estimate;

/// `(k^2 + 1) 2^-k + k e^-k`, the upper bound on the probability that a
/// site of row `i >= 1` is active.
pub fn activation_bound(k: usize) -> f64 {
    let k = k as f64;
    (k * k + 1.0) * 2f64.powf(-k) + k * (-k).exp()
}

/// `k e^-k`, the union bound on the probability that a site is susceptible.
pub fn susceptibility_bound(k: usize) -> f64 {
    let k = k as f64;
    k * (-k).exp()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ActivationEstimate {
    pub edge: usize,
    pub block: usize,
    /// Frequency of `A(a, i)`.
    pub active: Estimate,
    /// Frequency of `S(a, i + 1)`.
    pub susceptible_next: Estimate,
    pub active_bound: f64,
    pub susceptible_bound: f64,
}

/// Monte Carlo frequency of the site `(a, i)` being active, and of `(a, i+1)`
/// being susceptible, over independent update streams.
pub fn estimate_activation_prob(
    g: &Hypergraph,
    a: usize,
    i: usize,
    trials: u64,
    seed: u64,
) -> Result<ActivationEstimate> {
    if i == 0 || trials == 0 {
        return Err(Error::InvalidArgument(
            "need block i >= 1 and at least one trial".into(),
        ));
    }
    if a >= g.edge_count() {
        return Err(Error::InvalidArgument(format!("no edge with id {}", a + 1)));
    }
    let horizon = ((i + 2) * g.k()) as f64;
    let (hits_a, hits_s) = (0..trials)
        .into_par_iter()
        .map(|t| {
            let s = sample_update_stream(g.n(), horizon, derive_seed(seed, t));
            (
                u64::from(site_active(g, &s, a, i)),
                u64::from(site_susceptible(g, &s, a, i + 1)),
            )
        })
        .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1));
    Ok(ActivationEstimate {
        edge: a,
        block: i,
        active: Estimate::from_counts(hits_a, trials),
        susceptible_next: Estimate::from_counts(hits_s, trials),
        active_bound: activation_bound(g.k()),
        susceptible_bound: susceptibility_bound(g.k()),
    })
}
