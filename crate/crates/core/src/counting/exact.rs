use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub const DEFAULT_EXACT_CAP: usize = 40;
pub const EXHAUSTIVE_CAP: usize = 25;

/// `Z(G)`, the number of independent sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactCount {
    pub value: u128,
}

pub fn exact_count(g: &Hypergraph) -> Result<ExactCount> {
    exact_count_with_cap(g, DEFAULT_EXACT_CAP)
}

/// Branch-and-prune count. Each branch fixes one vertex: a 0 satisfies every
/// edge through it, a 1 shrinks them. Vertices left in no constraint
/// contribute a factor 2, independent constraint groups multiply, and
/// residual constraint sets are memoized.
pub fn exact_count_with_cap(g: &Hypergraph, cap: usize) -> Result<ExactCount> {
    if g.n() > cap.min(64) {
        return Err(Error::CapExceeded {
            what: "vertex count for exact counting".into(),
            size: g.n() as u128,
            cap: cap.min(64) as u128,
        });
    }
    let masks = g.edge_masks().expect("n <= 64");
    let all: u64 = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    let covered = masks.iter().fold(0, |acc, m| acc | m);
    let free = (all & !covered).count_ones();
    let mut memo = HashMap::new();
    let value = count_constraints(masks, &mut memo) << free;
    Ok(ExactCount { value })
}

/// Number of assignments to the vertices covered by `edges` with no edge
/// fully set.
fn count_constraints(mut edges: Vec<u64>, memo: &mut HashMap<Vec<u64>, u128>) -> u128 {
    if edges.is_empty() {
        return 1;
    }
    if edges.contains(&0) {
        return 0;
    }
    edges.sort_unstable();
    edges.dedup();
    if let Some(&c) = memo.get(&edges) {
        return c;
    }

    let result = match split_components(&edges) {
        Some(parts) => parts
            .into_iter()
            .map(|p| count_constraints(p, memo))
            .product(),
        None => {
            let covered = edges.iter().fold(0, |acc, m| acc | m);
            let v = branch_vertex(&edges);
            let bit = 1u64 << v;

            // v = 0: every edge through v is satisfied.
            let zero: Vec<u64> = edges.iter().copied().filter(|e| e & bit == 0).collect();
            let zero_cov = zero.iter().fold(0, |acc, m| acc | m);
            let zero_free = ((covered & !bit) & !zero_cov).count_ones();

            // v = 1: v leaves every edge it was in.
            let one: Vec<u64> = edges.iter().map(|e| e & !bit).collect();
            let one_cov = one.iter().fold(0, |acc, m| acc | m);
            let one_free = ((covered & !bit) & !one_cov).count_ones();

            (count_constraints(zero, memo) << zero_free)
                + (count_constraints(one, memo) << one_free)
        }
    };
    memo.insert(edges, result);
    result
}

fn branch_vertex(edges: &[u64]) -> u32 {
    let mut counts = [0u32; 64];
    for &e in edges {
        let mut m = e;
        while m != 0 {
            counts[m.trailing_zeros() as usize] += 1;
            m &= m - 1;
        }
    }
    (0..64u32).max_by_key(|&v| counts[v as usize]).unwrap()
}

/// Splits the constraints into groups with disjoint supports; `None` when
/// they form a single group.
fn split_components(edges: &[u64]) -> Option<Vec<Vec<u64>>> {
    let mut groups: Vec<(u64, Vec<u64>)> = Vec::new();
    for &e in edges {
        let mut support = e;
        let mut members = vec![e];
        let mut i = 0;
        while i < groups.len() {
            if groups[i].0 & support != 0 {
                let (s, m) = groups.swap_remove(i);
                support |= s;
                members.extend(m);
            } else {
                i += 1;
            }
        }
        groups.push((support, members));
    }
    (groups.len() > 1).then(|| groups.into_iter().map(|(_, m)| m).collect())
}

/// Plain enumeration of all `2^n` configurations, for `n <= 25`.
pub fn exact_count_exhaustive(g: &Hypergraph) -> Result<ExactCount> {
    if g.n() > EXHAUSTIVE_CAP {
        return Err(Error::CapExceeded {
            what: "vertex count for exhaustive counting".into(),
            size: g.n() as u128,
            cap: EXHAUSTIVE_CAP as u128,
        });
    }
    let masks = g.edge_masks().expect("n <= 25");
    let value = (0..1u64 << g.n())
        .filter(|&s| masks.iter().all(|&m| s & m != m))
        .count() as u128;
    Ok(ExactCount { value })
}
