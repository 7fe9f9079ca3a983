//! Exact total-variation distance to the uniform distribution on
//! independent sets, maximized over starting states.

use serde::{Deserialize, Serialize};

use crate::dynamics::DiscreteKernel;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Largest `|Omega|` accepted by the exact TV computations.
pub const TV_STATE_CAP: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TvPoint {
    pub t: f64,
    pub tv: f64,
}

fn tv_to_uniform(dist: &[f64]) -> f64 {
    let u = 1.0 / dist.len() as f64;
    0.5 * dist.iter().map(|p| (p - u).abs()).sum::<f64>()
}

fn check_sorted<T: PartialOrd>(grid: &[T]) -> Result<()> {
    if grid.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidArgument("time grid must be sorted".into()));
    }
    Ok(())
}

fn point_mass(len: usize, at: usize) -> Vec<f64> {
    let mut d = vec![0.0; len];
    d[at] = 1.0;
    d
}

/// Distance after each step count in `t_grid` (sorted) for the chain
/// started from `initial`, a distribution over `kernel.states`.
pub fn tv_curve_from(
    kernel: &DiscreteKernel,
    initial: &[f64],
    t_grid: &[u64],
) -> Result<Vec<TvPoint>> {
    check_sorted(t_grid)?;
    if initial.len() != kernel.len() {
        return Err(Error::InvalidArgument(format!(
            "initial distribution has {} entries, state space has {}",
            initial.len(),
            kernel.len()
        )));
    }
    let mut dist = initial.to_vec();
    let mut at = 0u64;
    let mut out = Vec::with_capacity(t_grid.len());
    for &t in t_grid {
        while at < t {
            dist = kernel.step(&dist);
            at += 1;
        }
        out.push(TvPoint {
            t: t as f64,
            tv: tv_to_uniform(&dist),
        });
    }
    Ok(out)
}

fn max_over_starts(
    len: usize,
    mut curve: impl FnMut(usize) -> Result<Vec<TvPoint>>,
) -> Result<Vec<TvPoint>> {
    let mut best: Vec<TvPoint> = curve(0)?;
    for s in 1..len {
        for (b, p) in best.iter_mut().zip(curve(s)?) {
            b.tv = b.tv.max(p.tv);
        }
    }
    Ok(best)
}

/// Exact discrete-time worst-case distance from uniform after each step
/// count in `t_grid`. Refuses instances with more than [`TV_STATE_CAP`]
/// independent sets.
pub fn tv_distance_exact(g: &Hypergraph, t_grid: &[u64]) -> Result<Vec<TvPoint>> {
    let kernel = DiscreteKernel::build(g, TV_STATE_CAP)?;
    max_over_starts(kernel.len(), |s| {
        tv_curve_from(&kernel, &point_mass(kernel.len(), s), t_grid)
    })
}

/// Worst-case distance from uniform for the continuous-time chain at each
/// time in `times` (sorted). The continuous chain after time `t` is the
/// discrete chain run for a Poisson(`n t`) number of steps.
pub fn tv_distance_continuous(g: &Hypergraph, times: &[f64]) -> Result<Vec<TvPoint>> {
    check_sorted(times)?;
    if times.iter().any(|t| !(t.is_finite() && *t >= 0.0)) {
        return Err(Error::InvalidArgument(
            "times must be finite and nonnegative".into(),
        ));
    }
    let kernel = DiscreteKernel::build(g, TV_STATE_CAP)?;
    let rate = g.n() as f64;
    let max_lambda = times.last().map_or(0.0, |t| t * rate);
    let max_steps = (max_lambda + 12.0 * max_lambda.sqrt() + 30.0).ceil() as usize;
    max_over_starts(kernel.len(), |s| {
        let mut powers = Vec::with_capacity(max_steps + 1);
        let mut dist = point_mass(kernel.len(), s);
        for _ in 0..=max_steps {
            let next = kernel.step(&dist);
            powers.push(dist);
            dist = next;
        }
        Ok(times
            .iter()
            .map(|&t| {
                let lambda = t * rate;
                let mut mix = vec![0.0; kernel.len()];
                let mut w = (-lambda).exp();
                for (j, p) in powers.iter().enumerate() {
                    if j > 0 {
                        w *= lambda / j as f64;
                    }
                    for (m, q) in mix.iter_mut().zip(p) {
                        *m += w * q;
                    }
                }
                TvPoint {
                    t,
                    tv: tv_to_uniform(&mix),
                }
            })
            .collect())
    })
}
