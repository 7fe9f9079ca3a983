use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Site, SiteMap};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Which oriented graph on sites to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PercolationVariant {
    /// `(a,i) -> (b,j)` iff `a` and `b` overlap and `j - i` is 0 or 1.
    General,
    /// `(a,i) -> (a,i+2)`, or `a != b` overlapping with `j - i` in {0, 1, 2}.
    Linear,
}

/// Oriented adjacency between sites of rows `0..=blocks`.
#[derive(Debug, Clone)]
pub struct SiteAdjacency {
    variant: PercolationVariant,
    blocks: usize,
    // Overlapping edges of each edge, itself included, ascending.
    neighbors: Vec<Vec<usize>>,
}

impl SiteAdjacency {
    pub fn new(g: &Hypergraph, variant: PercolationVariant, blocks: usize) -> Self {
        SiteAdjacency {
            variant,
            blocks,
            neighbors: (0..g.edge_count()).map(|a| g.edge_neighbors(a)).collect(),
        }
    }

    pub fn variant(&self) -> PercolationVariant {
        self.variant
    }

    pub fn blocks(&self) -> usize {
        self.blocks
    }

    fn overlaps(&self, a: usize, b: usize) -> bool {
        self.neighbors[a].binary_search(&b).is_ok()
    }

    /// Whether the oriented edge `from -> to` exists.
    pub fn is_edge(&self, (a, i): Site, (b, j): Site) -> bool {
        if j < i || j > self.blocks || a >= self.neighbors.len() || b >= self.neighbors.len() {
            return false;
        }
        let dj = j - i;
        match self.variant {
            PercolationVariant::General => dj <= 1 && self.overlaps(a, b),
            PercolationVariant::Linear => {
                if a == b {
                    dj == 2
                } else {
                    dj <= 2 && self.overlaps(a, b)
                }
            }
        }
    }

    /// All sites reachable by one oriented edge from `site`.
    pub fn successors(&self, (a, i): Site) -> Vec<Site> {
        let reach = match self.variant {
            PercolationVariant::General => 1,
            PercolationVariant::Linear => 2,
        };
        let mut out = Vec::new();
        for &b in &self.neighbors[a] {
            for j in i..=(i + reach).min(self.blocks) {
                if self.is_edge((a, i), (b, j)) {
                    out.push((b, j));
                }
            }
        }
        out
    }
}

/// An oriented sequence of sites.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SitePath {
    pub sites: Vec<Site>,
}

impl SitePath {
    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    /// Consecutive sites are joined by oriented edges.
    pub fn is_path(&self, adj: &SiteAdjacency) -> bool {
        !self.sites.is_empty() && self.sites.windows(2).all(|w| adj.is_edge(w[0], w[1]))
    }

    /// No oriented edge from step `j1` to any step `j2 >= j1 + 2`.
    pub fn is_minimal(&self, adj: &SiteAdjacency) -> bool {
        let s = &self.sites;
        (0..s.len()).all(|j1| (j1 + 2..s.len()).all(|j2| !adj.is_edge(s[j1], s[j2])))
    }
}

impl fmt::Display for SitePath {
    /// `a:i -> a:i -> ...` with 1-based edge ids.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (a, i)) in self.sites.iter().enumerate() {
            if idx > 0 {
                f.write_str(" -> ")?;
            }
            write!(f, "{}:{}", a + 1, i)?;
        }
        Ok(())
    }
}

/// Breadth-first search for an oriented path of bad sites from row 0 to
/// row `M`.
pub fn find_bad_path(map: &SiteMap, adj: &SiteAdjacency) -> Option<SitePath> {
    let m = map.blocks();
    assert_eq!(m, adj.blocks(), "site map and adjacency disagree on M");
    let rows = m + 1;
    let id = |(a, i): Site| a * rows + i;
    let mut parent: Vec<Option<usize>> = vec![None; map.edge_count() * rows];
    let mut seen = vec![false; map.edge_count() * rows];
    let mut queue = VecDeque::new();
    for a in 0..map.edge_count() {
        if map.bad((a, 0)) {
            seen[id((a, 0))] = true;
            queue.push_back((a, 0));
        }
    }
    while let Some(site) = queue.pop_front() {
        if site.1 == m {
            let mut sites = vec![site];
            let mut cur = id(site);
            while let Some(p) = parent[cur] {
                sites.push((p / rows, p % rows));
                cur = p;
            }
            sites.reverse();
            return Some(SitePath { sites });
        }
        for next in adj.successors(site) {
            let nid = id(next);
            if !seen[nid] && map.bad(next) {
                seen[nid] = true;
                parent[nid] = Some(id(site));
                queue.push_back(next);
            }
        }
    }
    None
}

/// Deletes sites until no step has an oriented edge to any step two or
/// more positions later. Endpoints are kept.
///
/// From each retained site the walk jumps to the furthest later site it is
/// adjacent to, so every skipped-over pair is non-adjacent by construction.
pub fn minimize_path(path: &SitePath, adj: &SiteAdjacency) -> Result<SitePath> {
    if !path.is_path(adj) {
        return Err(Error::InvalidArgument(
            "input is not an oriented path of the chosen site graph".into(),
        ));
    }
    let s = &path.sites;
    let last = s.len() - 1;
    let mut out = vec![s[0]];
    let mut cur = 0;
    while cur < last {
        let next = (cur + 1..=last)
            .rev()
            .find(|&j| adj.is_edge(s[cur], s[j]))
            .expect("consecutive sites are adjacent");
        out.push(s[next]);
        cur = next;
    }
    Ok(SitePath { sites: out })
}

/// `n (2k(Delta - 1) + 1)^(2r)`: the number of candidate minimal paths of
/// length `2r` in the general site graph.
pub fn path_count_bound(n: u64, k: u64, max_degree: u64, r: u32) -> Result<u128> {
    if n == 0 || k == 0 || max_degree == 0 {
        return Err(Error::InvalidArgument(
            "n, k and max degree must be positive".into(),
        ));
    }
    let base = 2 * u128::from(k) * (u128::from(max_degree) - 1) + 1;
    r.checked_mul(2)
        .and_then(|e| base.checked_pow(e))
        .and_then(|p| p.checked_mul(u128::from(n)))
        .ok_or_else(|| Error::Overflow(format!("path count bound for r = {r}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3() -> Hypergraph {
        // a0={1,2}, a1={2,3}, a2={4,5}
        Hypergraph::new(5, 2, vec![vec![0, 1], vec![1, 2], vec![3, 4]]).unwrap()
    }

    #[test]
    fn general_variant_edges() {
        let adj = SiteAdjacency::new(&chain3(), PercolationVariant::General, 5);
        assert!(adj.is_edge((0, 1), (0, 2)));
        assert!(adj.is_edge((0, 1), (1, 1)));
        assert!(adj.is_edge((0, 1), (1, 2)));
        assert!(!adj.is_edge((0, 1), (1, 3)));
        assert!(!adj.is_edge((0, 1), (0, 3)));
        assert!(!adj.is_edge((0, 1), (2, 1)));
        assert!(!adj.is_edge((0, 2), (0, 1)));
    }

    #[test]
    fn linear_variant_edges() {
        let adj = SiteAdjacency::new(&chain3(), PercolationVariant::Linear, 5);
        assert!(!adj.is_edge((0, 1), (0, 2)));
        assert!(adj.is_edge((0, 1), (0, 3)));
        assert!(!adj.is_edge((0, 1), (0, 1)));
        assert!(adj.is_edge((0, 1), (1, 1)));
        assert!(adj.is_edge((0, 1), (1, 3)));
        assert!(!adj.is_edge((0, 1), (1, 4)));
    }

    #[test]
    fn successors_respect_last_row() {
        let adj = SiteAdjacency::new(&chain3(), PercolationVariant::General, 2);
        let mut s = adj.successors((0, 2));
        s.sort();
        assert_eq!(s, vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn path_display_is_one_based() {
        let p = SitePath {
            sites: vec![(0, 0), (1, 1)],
        };
        assert_eq!(p.to_string(), "1:0 -> 2:1");
    }

    #[test]
    fn vertical_stack_is_already_minimal_in_general_variant() {
        let adj = SiteAdjacency::new(&chain3(), PercolationVariant::General, 5);
        let p = SitePath {
            sites: vec![(0, 0), (0, 1), (0, 2), (0, 3)],
        };
        assert!(p.is_minimal(&adj));
        assert_eq!(minimize_path(&p, &adj).unwrap(), p);
    }

    #[test]
    fn shortcuts_are_removed() {
        let adj = SiteAdjacency::new(&chain3(), PercolationVariant::General, 5);
        // (0,0) reaches (1,1) directly, so the detour through (1,0),(0,1) goes.
        let p = SitePath {
            sites: vec![(0, 0), (1, 0), (0, 1), (1, 1), (1, 2)],
        };
        let m = minimize_path(&p, &adj).unwrap();
        assert_eq!(m.sites, vec![(0, 0), (1, 1), (1, 2)]);
        assert!(m.is_minimal(&adj));
    }

    #[test]
    fn non_path_is_rejected() {
        let adj = SiteAdjacency::new(&chain3(), PercolationVariant::General, 5);
        let p = SitePath {
            sites: vec![(0, 0), (2, 1)],
        };
        assert!(minimize_path(&p, &adj).is_err());
    }

    #[test]
    fn count_bound_values() {
        assert_eq!(path_count_bound(10, 3, 2, 1).unwrap(), 490);
        assert_eq!(path_count_bound(10, 3, 2, 0).unwrap(), 10);
        assert!(matches!(
            path_count_bound(10, 9, 9, 40),
            Err(Error::Overflow(_))
        ));
    }
}
