use std::collections::VecDeque;

use super::Hypergraph;

/// True iff no two distinct edges share more than one vertex.
pub fn is_linear(g: &Hypergraph) -> bool {
    (0..g.edge_count()).all(|a| {
        g.edge_neighbors(a)
            .into_iter()
            .filter(|&b| b > a)
            .all(|b| g.overlap(a, b) <= 1)
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RGoodReport {
    pub radius: usize,
    pub good: bool,
    /// Independent cycles (cyclomatic number) in the ball around each vertex.
    pub cycle_counts: Vec<usize>,
}

/// Checks that every radius-`r` ball contains at most one cycle.
///
/// Distances count hyperedges, so the ball around `v` is the subgraph of the
/// bipartite incidence graph induced on nodes within `2r` hops of `v`. Its
/// cycle count is `edges - nodes + 1` (the ball is connected).
pub fn is_r_good(g: &Hypergraph, r: usize) -> RGoodReport {
    let n = g.n();
    let hops = 2 * r;
    // Bipartite node ids: vertices 0..n, edges n..n+m.
    let mut dist = vec![usize::MAX; n + g.edge_count()];
    let mut touched = Vec::new();
    let mut cycle_counts = Vec::with_capacity(n);
    for v in 0..n {
        for &x in &touched {
            dist[x] = usize::MAX;
        }
        touched.clear();
        let mut queue = VecDeque::from([v]);
        dist[v] = 0;
        touched.push(v);
        while let Some(x) = queue.pop_front() {
            if dist[x] == hops {
                continue;
            }
            let next: Vec<usize> = if x < n {
                g.vertex_edges(x).iter().map(|&a| n + a).collect()
            } else {
                g.edge(x - n).to_vec()
            };
            for y in next {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    touched.push(y);
                    queue.push_back(y);
                }
            }
        }
        let nodes = touched.len();
        let links: usize = touched
            .iter()
            .filter(|&&x| x >= n)
            .map(|&x| {
                g.edge(x - n)
                    .iter()
                    .filter(|&&u| dist[u] != usize::MAX)
                    .count()
            })
            .sum();
        cycle_counts.push(links + 1 - nodes);
    }
    RGoodReport {
        radius: r,
        good: cycle_counts.iter().all(|&c| c <= 1),
        cycle_counts,
    }
}

/// Drops vertices `0..i` together with every edge touching them, then
/// shifts the remaining vertices down by `i`.
pub fn remove_first_vertices(g: &Hypergraph, i: usize) -> Hypergraph {
    let i = i.min(g.n());
    let edges = g
        .edges()
        .iter()
        .filter(|e| e[0] >= i)
        .map(|e| e.iter().map(|v| v - i).collect())
        .collect();
    Hypergraph::from_checked(g.n() - i, g.k(), edges)
}
