use serde::Serialize;

use crate::dynamics::{is_activated, UpdateStream};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// `(edge id, block index)`, both 0-based.
pub type Site = (usize, usize);

/// Whether `(a, i)` is active: always for `i = 0`, otherwise iff some
/// update `(v, t, 1)` with `v` in `a` and `t` in `[T_i, T_{i+1})` finds
/// `Y_{T_{i-1}, t}` all-ones on `a`.
pub fn site_active(g: &Hypergraph, stream: &UpdateStream, a: usize, i: usize) -> bool {
    if i == 0 {
        return true;
    }
    let k = g.k() as f64;
    let (s, lo, hi) = ((i - 1) as f64 * k, i as f64 * k, (i + 1) as f64 * k);
    g.edge(a).iter().any(|&v| {
        stream.vertex_events(v).iter().any(|&idx| {
            let e = &stream.events()[idx];
            e.mark && e.time >= lo && e.time < hi && is_activated(g, stream, v, a, e.time, s)
        })
    })
}

/// Whether some vertex of `a` receives no update during `[T_i, T_{i+1})`.
pub fn site_susceptible(g: &Hypergraph, stream: &UpdateStream, a: usize, i: usize) -> bool {
    let k = g.k() as f64;
    let (lo, hi) = (i as f64 * k, (i + 1) as f64 * k);
    g.edge(a).iter().any(|&v| !stream.updated_in(v, lo, hi))
}

/// Classification of every site `(a, i)`, `0 <= i <= M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SiteMap {
    blocks: usize,
    block_length: usize,
    edges: usize,
    active: Vec<bool>,
    susceptible: Vec<bool>,
    bad: Vec<bool>,
}

#[derive(Serialize)]
struct SiteRow {
    edge_id: usize,
    block: usize,
    active: u8,
    susceptible: u8,
    bad: u8,
}

impl SiteMap {
    fn idx(&self, (a, i): Site) -> usize {
        debug_assert!(a < self.edges && i <= self.blocks);
        a * (self.blocks + 1) + i
    }

    /// Highest block index `M`.
    pub fn blocks(&self) -> usize {
        self.blocks
    }

    pub fn block_length(&self) -> usize {
        self.block_length
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn active(&self, site: Site) -> bool {
        self.active[self.idx(site)]
    }

    pub fn susceptible(&self, site: Site) -> bool {
        self.susceptible[self.idx(site)]
    }

    pub fn bad(&self, site: Site) -> bool {
        self.bad[self.idx(site)]
    }

    /// CSV with columns `edge_id,block,active,susceptible,bad`; edge ids are 1-based.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for a in 0..self.edges {
            for i in 0..=self.blocks {
                w.serialize(SiteRow {
                    edge_id: a + 1,
                    block: i,
                    active: self.active((a, i)).into(),
                    susceptible: self.susceptible((a, i)).into(),
                    bad: self.bad((a, i)).into(),
                })?;
            }
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

/// Classifies the sites of rows `0..=blocks`. The stream must cover
/// `[0, (blocks + 1) k]`.
pub fn classify_sites(g: &Hypergraph, stream: &UpdateStream, blocks: usize) -> Result<SiteMap> {
    let k = g.k();
    let needed = ((blocks + 1) * k) as f64;
    if stream.horizon() < needed {
        return Err(Error::InvalidArgument(format!(
            "stream horizon {} is shorter than (M+1)k = {needed}",
            stream.horizon()
        )));
    }
    if stream.n() != g.n() {
        return Err(Error::InvalidArgument(format!(
            "stream has {} vertices, hypergraph has {}",
            stream.n(),
            g.n()
        )));
    }
    let m = g.edge_count();
    let rows = blocks + 1;
    let mut map = SiteMap {
        blocks,
        block_length: k,
        edges: m,
        active: vec![false; m * rows],
        susceptible: vec![false; m * rows],
        bad: vec![false; m * rows],
    };
    for a in 0..m {
        for i in 0..rows {
            let at = a * rows + i;
            map.active[at] = site_active(g, stream, a, i);
            map.susceptible[at] = site_susceptible(g, stream, a, i);
            // bad(a,i) = active(a,i) or (susceptible(a,i) and bad(a,i-1))
            map.bad[at] = map.active[at] || (i > 0 && map.susceptible[at] && map.bad[at - 1]);
        }
    }
    Ok(map)
}
