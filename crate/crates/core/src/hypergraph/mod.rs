//! Uniform hypergraphs stored as a bipartite incidence structure.
//!
//! Vertices are `0..n` internally; the text format and everything user-facing
//! is 1-based. Edges keep their insertion order and store their vertices in
//! ascending order.

mod generate;
mod io;
mod structure;

pub use generate::{generate_random_regular, generate_random_regular_with, GenerateOptions};
pub use io::{parse_hypergraph, serialize_hypergraph, validate_text, ValidationReport};
pub use structure::{is_linear, is_r_good, remove_first_vertices, RGoodReport};

use std::collections::HashSet;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    k: usize,
    edges: Vec<Vec<usize>>,
    vertex_edges: Vec<Vec<usize>>,
    max_degree: usize,
}

impl Hypergraph {
    /// Builds a `k`-uniform hypergraph on `n` vertices from 0-based edges.
    /// Vertices within each edge are sorted; every invariant is checked.
    pub fn new(n: usize, k: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidHypergraph("edge size k must be >= 1".into()));
        }
        let mut seen = HashSet::with_capacity(edges.len());
        let mut sorted = Vec::with_capacity(edges.len());
        for (idx, mut e) in edges.into_iter().enumerate() {
            if e.len() != k {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {} has {} vertices, expected {k}",
                    idx + 1,
                    e.len()
                )));
            }
            e.sort_unstable();
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {} contains vertex {} outside 1..={n}",
                    idx + 1,
                    v + 1
                )));
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {} repeats a vertex",
                    idx + 1
                )));
            }
            if !seen.insert(e.clone()) {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {} duplicates an earlier edge",
                    idx + 1
                )));
            }
            sorted.push(e);
        }
        Ok(Self::from_checked(n, k, sorted))
    }

    pub(crate) fn from_checked(n: usize, k: usize, edges: Vec<Vec<usize>>) -> Self {
        let mut vertex_edges = vec![Vec::new(); n];
        for (a, e) in edges.iter().enumerate() {
            for &v in e {
                vertex_edges[v].push(a);
            }
        }
        let max_degree = vertex_edges.iter().map(Vec::len).max().unwrap_or(0);
        Hypergraph {
            n,
            k,
            edges,
            vertex_edges,
            max_degree,
        }
    }

    /// Hypergraph with `n` vertices and no edges.
    pub fn empty(n: usize, k: usize) -> Result<Self> {
        Self::new(n, k, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// The vertices `∂a` of edge `a`, ascending.
    pub fn edge(&self, a: usize) -> &[usize] {
        &self.edges[a]
    }

    /// The edges `∂v` incident to vertex `v`, ascending.
    pub fn vertex_edges(&self, v: usize) -> &[usize] {
        &self.vertex_edges[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.vertex_edges[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn overlap(&self, a: usize, b: usize) -> usize {
        let (x, y) = (&self.edges[a], &self.edges[b]);
        let (mut i, mut j, mut c) = (0, 0, 0);
        while i < x.len() && j < y.len() {
            match x[i].cmp(&y[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    c += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        c
    }

    /// Edges sharing at least one vertex with `a`, including `a` itself, ascending.
    pub fn edge_neighbors(&self, a: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.edges[a]
            .iter()
            .flat_map(|&v| self.vertex_edges[v].iter().copied())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// One bitmask per edge, available when `n <= 64`.
    pub fn edge_masks(&self) -> Option<Vec<u64>> {
        (self.n <= 64).then(|| {
            self.edges
                .iter()
                .map(|e| e.iter().fold(0u64, |m, &v| m | (1u64 << v)))
                .collect()
        })
    }

    /// True iff no edge has all of its vertices set.
    pub fn is_independent(&self, config: &[bool]) -> bool {
        config.len() == self.n && self.edges.iter().all(|e| e.iter().any(|&v| !config[v]))
    }

    /// Disjoint union; the vertices of `other` are shifted past ours.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Result<Hypergraph> {
        if self.k != other.k {
            return Err(Error::InvalidArgument(format!(
                "cannot join a {}-uniform and a {}-uniform hypergraph",
                self.k, other.k
            )));
        }
        let mut edges = self.edges.clone();
        edges.extend(
            other
                .edges
                .iter()
                .map(|e| e.iter().map(|v| v + self.n).collect()),
        );
        Ok(Self::from_checked(self.n + other.n, self.k, edges))
    }

    /// Same hypergraph with one extra isolated vertex appended.
    pub fn with_isolated_vertex(&self) -> Hypergraph {
        Self::from_checked(self.n + 1, self.k, self.edges.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacency_is_transpose_of_edges() {
        let g = Hypergraph::new(5, 3, vec![vec![0, 1, 2], vec![4, 3, 2]]).unwrap();
        assert_eq!(g.edge(1), &[2, 3, 4]);
        assert_eq!(g.vertex_edges(2), &[0, 1]);
        assert_eq!(g.vertex_edges(4), &[1]);
        assert_eq!(g.max_degree(), 2);
        assert_eq!(g.overlap(0, 1), 1);
        assert_eq!(g.edge_neighbors(0), vec![0, 1]);
    }

    #[test]
    fn rejects_invalid_edges() {
        assert!(Hypergraph::new(3, 3, vec![vec![0, 1]]).is_err());
        assert!(Hypergraph::new(3, 2, vec![vec![0, 3]]).is_err());
        assert!(Hypergraph::new(3, 2, vec![vec![1, 1]]).is_err());
        assert!(Hypergraph::new(3, 2, vec![vec![0, 1], vec![1, 0]]).is_err());
        assert!(Hypergraph::new(3, 0, vec![]).is_err());
    }

    #[test]
    fn independence_check() {
        let g = Hypergraph::new(3, 2, vec![vec![0, 1]]).unwrap();
        assert!(g.is_independent(&[true, false, true]));
        assert!(!g.is_independent(&[true, true, false]));
    }
}
