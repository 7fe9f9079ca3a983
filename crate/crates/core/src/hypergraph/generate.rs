//! Configuration-model sampler for `d`-regular `k`-uniform hypergraphs.
//!
//! `n * d` vertex stubs are shuffled and cut into consecutive groups of `k`.
//! Matchings with a repeated vertex inside a group, or with two identical
//! groups, are rejected and the whole matching is redrawn, so accepted
//! outputs are uniform over simple hypergraphs.

use std::collections::HashSet;

use rand::seq::SliceRandom;

use super::Hypergraph;
use crate::error::{Error, Result};
use crate::rng::rng_from_seed;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenerateOptions {
    pub max_attempts: usize,
}

impl Default for GenerateOptions {
    fn default() -> Self {
        GenerateOptions {
            max_attempts: 10_000,
        }
    }
}

pub fn generate_random_regular(n: usize, d: usize, k: usize, seed: u64) -> Result<Hypergraph> {
    generate_random_regular_with(n, d, k, seed, GenerateOptions::default())
}

pub fn generate_random_regular_with(
    n: usize,
    d: usize,
    k: usize,
    seed: u64,
    opts: GenerateOptions,
) -> Result<Hypergraph> {
    if d < 1 || k < 2 {
        return Err(Error::InvalidArgument(format!(
            "need d >= 1 and k >= 2, got d={d}, k={k}"
        )));
    }
    if !(n * d).is_multiple_of(k) {
        return Err(Error::InvalidArgument(format!(
            "n*d = {} is not divisible by k = {k}",
            n * d
        )));
    }
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "edge size k = {k} exceeds vertex count n = {n}"
        )));
    }
    let mut rng = rng_from_seed(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    'attempt: for _ in 0..opts.max_attempts {
        stubs.shuffle(&mut rng);
        let mut edges = Vec::with_capacity(stubs.len() / k);
        let mut seen = HashSet::with_capacity(stubs.len() / k);
        for chunk in stubs.chunks(k) {
            let mut e = chunk.to_vec();
            e.sort_unstable();
            if e.windows(2).any(|w| w[0] == w[1]) || !seen.insert(e.clone()) {
                continue 'attempt;
            }
            edges.push(e);
        }
        return Ok(Hypergraph::from_checked(n, k, edges));
    }
    Err(Error::GenerationFailed {
        attempts: opts.max_attempts,
    })
}
