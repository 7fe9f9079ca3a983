//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the algorithms under test beyond constructing hypergraphs.

#![allow(dead_code)]

use hypermix_core::Hypergraph;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `m` distinct random `k`-subsets of `0..n` (fewer if collisions keep
/// happening).
pub fn random_hypergraph<R: Rng>(n: usize, k: usize, m: usize, rng: &mut R) -> Hypergraph {
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut tries = 0;
    while edges.len() < m && tries < 50 * (m + 1) {
        tries += 1;
        let mut e = sample(rng, n, k).into_vec();
        e.sort_unstable();
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    Hypergraph::new(n, k, edges).unwrap()
}

pub fn is_independent_mask(g: &Hypergraph, mask: u64) -> bool {
    g.edges()
        .iter()
        .all(|e| !e.iter().all(|&v| mask >> v & 1 == 1))
}

/// Every independent set by scanning all `2^n` subsets.
pub fn brute_independent_sets(g: &Hypergraph) -> Vec<u64> {
    assert!(g.n() <= 24);
    (0..1u64 << g.n())
        .filter(|&s| is_independent_mask(g, s))
        .collect()
}

pub fn brute_count(g: &Hypergraph) -> u128 {
    brute_independent_sets(g).len() as u128
}

/// Probability that vertex `v` is 0 under the uniform distribution.
pub fn brute_marginal_zero(g: &Hypergraph, v: usize) -> f64 {
    let sets = brute_independent_sets(g);
    sets.iter().filter(|&&s| s >> v & 1 == 0).count() as f64 / sets.len() as f64
}

/// Dense discrete-time transition matrix over the independent sets, written
/// straight from the update rule.
pub fn brute_kernel(g: &Hypergraph) -> (Vec<u64>, Vec<Vec<f64>>) {
    let states = brute_independent_sets(g);
    let n = g.n();
    let pos = |s: u64| states.binary_search(&s).unwrap();
    let mut p = vec![vec![0.0; states.len()]; states.len()];
    for (i, &s) in states.iter().enumerate() {
        for v in 0..n {
            let w = 0.5 / n as f64;
            p[i][pos(s & !(1 << v))] += w;
            let up = s | 1 << v;
            let target = if is_independent_mask(g, up) { up } else { s };
            p[i][pos(target)] += w;
        }
    }
    (states, p)
}

pub fn path_graph(n: usize) -> Hypergraph {
    Hypergraph::new(n, 2, (1..n).map(|v| vec![v - 1, v]).collect()).unwrap()
}

pub fn cycle_graph(n: usize) -> Hypergraph {
    Hypergraph::new(
        n,
        2,
        (0..n)
            .map(|v| {
                let mut e = vec![v, (v + 1) % n];
                e.sort_unstable();
                e
            })
            .collect(),
    )
    .unwrap()
}

/// Standard normal quantile bound: `|x - mu| <= z * sigma`.
pub fn within(x: f64, mu: f64, sigma: f64, z: f64) -> bool {
    (x - mu).abs() <= z * sigma + 1e-12
}

/// Like [`random_hypergraph`], then adds one random edge through every
/// vertex still left uncovered.
pub fn random_covering_hypergraph<R: Rng>(n: usize, k: usize, m: usize, rng: &mut R) -> Hypergraph {
    let mut edges = random_hypergraph(n, k, m, rng).edges().to_vec();
    for v in 0..n {
        while !edges.iter().any(|e| e.contains(&v)) {
            let mut e: Vec<usize> = sample(rng, n, k).into_vec();
            if !e.contains(&v) {
                e[0] = v;
            }
            e.sort_unstable();
            if !edges.contains(&e) {
                edges.push(e);
            }
        }
    }
    Hypergraph::new(n, k, edges).unwrap()
}
