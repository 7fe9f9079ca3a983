//! Counting by sampling. With `G_i` the hypergraph left after deleting
//! vertices `1..=i` and every edge touching them,
//! `1 / Z(G) = prod_i P_{G_{i-1}}(sigma_i = 0)`; each factor is estimated by
//! running the discrete chain from all-zero and the product is inverted.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dynamics::DiscreteGlauber;
use crate::error::{Error, Result};
use crate::hypergraph::{remove_first_vertices, Hypergraph};
use crate::rng::{child_rng, derive_seed};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FprasConfig {
    /// `C` in the per-unit run length `ceil(C n ln(n + 1))` discrete steps.
    pub burn_in_constant: f64,
}

impl Default for FprasConfig {
    fn default() -> Self {
        FprasConfig {
            burn_in_constant: 20.0,
        }
    }
}

// Guards the ceilings below against ln-ratio rounding (ln 0.5 / ln 2 must
// give exactly 1, not 1 + 1ulp).
fn ceil_tol(x: f64) -> f64 {
    (x - 1e-9).ceil()
}

/// `(M, N)` for accuracy `eps`: `M = 1 + 2 ceil(|ln eps| / ln 2)` run-length
/// multiplier and `N = 32 ceil(|ln eps|) / eps^2` samples (rounded up).
pub fn sample_parameters(eps: f64) -> Result<(u64, u64)> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "epsilon must lie in (0, 1), got {eps}"
        )));
    }
    let l = eps.ln().abs();
    let m = 1 + 2 * ceil_tol(l / std::f64::consts::LN_2) as u64;
    let n = ceil_tol(32.0 * ceil_tol(l) / (eps * eps)) as u64;
    Ok((m, n))
}

/// Discrete steps per sample on an `n`-vertex hypergraph: `M ceil(C n ln(n+1))`.
pub fn burn_in_steps(n: usize, multiplier: u64, cfg: &FprasConfig) -> u64 {
    let t_run = (cfg.burn_in_constant * n as f64 * (n as f64 + 1.0).ln()).ceil() as u64;
    multiplier * t_run
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MarginalEstimate {
    pub p: f64,
    pub samples: u64,
    pub steps_per_sample: u64,
}

/// Fraction of `N` independent chains, each run `M t_run` steps from
/// all-zero, that end with `v` unset.
pub fn estimate_marginal_zero(
    g: &Hypergraph,
    v: usize,
    eps: f64,
    seed: u64,
    cfg: &FprasConfig,
) -> Result<MarginalEstimate> {
    if v >= g.n() {
        return Err(Error::InvalidArgument(format!("no vertex {}", v + 1)));
    }
    let (m, n_samples) = sample_parameters(eps)?;
    let steps = burn_in_steps(g.n(), m, cfg);
    let zeros: u64 = (0..n_samples)
        .into_par_iter()
        .map_init(
            || DiscreteGlauber::new(g),
            |chain, r| {
                chain.reset();
                let mut rng = child_rng(seed, r);
                chain.run(steps, &mut rng);
                u64::from(!chain.get(v))
            },
        )
        .sum();
    Ok(MarginalEstimate {
        p: zeros as f64 / n_samples as f64,
        samples: n_samples,
        steps_per_sample: steps,
    })
}

/// Approximate `Z(G)` with its full provenance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CountEstimate {
    pub value: f64,
    pub epsilon: f64,
    /// `N`
    pub n_samples: u64,
    /// `M`
    pub burn_in_multiplier: u64,
    /// Steps per sample on the full hypergraph (`M t_run(n)`).
    pub burn_in_steps: u64,
    pub burn_in_constant: f64,
    /// `p_i`, the estimate of `P_{G_{i-1}}(sigma_i = 0)`.
    pub per_vertex_marginals: Vec<f64>,
    pub seed: u64,
}

pub fn fpras_count(
    g: &Hypergraph,
    eps: f64,
    seed: u64,
    cfg: &FprasConfig,
) -> Result<CountEstimate> {
    let (m, n_samples) = sample_parameters(eps)?;
    let marginals: Vec<f64> = (0..g.n())
        .into_par_iter()
        .map(|i| {
            let stage = remove_first_vertices(g, i);
            let est = estimate_marginal_zero(&stage, 0, eps, derive_seed(seed, i as u64), cfg)?;
            if est.p == 0.0 {
                return Err(Error::ZeroMarginal {
                    vertex: i + 1,
                    samples: est.samples,
                });
            }
            Ok(est.p)
        })
        .collect::<Result<_>>()?;
    let log_inv: f64 = marginals.iter().map(|p| p.ln()).sum();
    Ok(CountEstimate {
        value: (-log_inv).exp(),
        epsilon: eps,
        n_samples,
        burn_in_multiplier: m,
        burn_in_steps: burn_in_steps(g.n(), m, cfg),
        burn_in_constant: cfg.burn_in_constant,
        per_vertex_marginals: marginals,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameters_at_half() {
        assert_eq!(sample_parameters(0.5).unwrap(), (3, 128));
        // |ln 0.2| = 1.609: M = 1 + 2*3, N = 32*2/0.04
        assert_eq!(sample_parameters(0.2).unwrap(), (7, 1600));
        assert!(sample_parameters(0.0).is_err());
        assert!(sample_parameters(1.0).is_err());
    }

    #[test]
    fn run_length() {
        let cfg = FprasConfig::default();
        // ceil(20 * 1 * ln 2) = 14
        assert_eq!(burn_in_steps(1, 3, &cfg), 42);
        assert_eq!(burn_in_steps(0, 3, &cfg), 0);
    }

    #[test]
    fn deterministic_per_seed() {
        let g = Hypergraph::new(4, 2, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let cfg = FprasConfig::default();
        let a = fpras_count(&g, 0.5, 9, &cfg).unwrap();
        let b = fpras_count(&g, 0.5, 9, &cfg).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.per_vertex_marginals.len(), 4);
        assert_eq!((a.burn_in_multiplier, a.n_samples), (3, 128));
    }

    #[test]
    fn empty_graph_counts_one() {
        let g = Hypergraph::empty(0, 2).unwrap();
        let est = fpras_count(&g, 0.5, 1, &FprasConfig::default()).unwrap();
        assert_eq!(est.value, 1.0);
    }
}
