use std::collections::HashMap;

use super::{SpinConfig, UpdateEvent, UpdateStream};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// An update `(v, t, 1)` is blocked when some edge of `v` already has all
/// of its other vertices set.
pub fn is_blocked(g: &Hypergraph, config: &SpinConfig, v: usize) -> bool {
    g.vertex_edges(v)
        .iter()
        .any(|&a| g.edge(a).iter().all(|&u| u == v || config.get(u)))
}

fn update_in_place(g: &Hypergraph, config: &mut SpinConfig, e: &UpdateEvent) {
    let value = e.mark && !is_blocked(g, config, e.vertex);
    config.set(e.vertex, value);
}

/// One Glauber update of the constrained chain.
pub fn apply_update(g: &Hypergraph, config: &SpinConfig, event: &UpdateEvent) -> SpinConfig {
    let mut next = config.clone();
    update_in_place(g, &mut next, event);
    next
}

/// `X` at time `t` started from `initial` at time `s`: the fold of
/// [`apply_update`] over the events in `(s, t]`.
pub fn evolve_x(
    g: &Hypergraph,
    initial: &SpinConfig,
    stream: &UpdateStream,
    s: f64,
    t: f64,
) -> SpinConfig {
    let mut x = initial.clone();
    for e in &stream.events()[stream.window(s, t)] {
        update_in_place(g, &mut x, e);
    }
    x
}

/// The dominating chain `Y_{s,t}`: all-ones at `s`, every event in `(s, t]`
/// applied unconditionally. All-ones when `t <= s`.
pub fn evolve_y(n: usize, stream: &UpdateStream, s: f64, t: f64) -> SpinConfig {
    let mut y = SpinConfig::ones(n);
    if t > s {
        for e in &stream.events()[stream.window(s, t)] {
            y.set(e.vertex, e.mark);
        }
    }
    y
}

/// Every independent set of `g` as a bitmask, in increasing order.
/// Fails when `g` has more than 64 vertices or more than `cap` independent sets.
pub fn enumerate_independent_sets(g: &Hypergraph, cap: usize) -> Result<Vec<u64>> {
    let n = g.n();
    let masks = g.edge_masks().ok_or_else(|| Error::CapExceeded {
        what: "vertex count for state enumeration".into(),
        size: n as u128,
        cap: 64,
    })?;
    // Edges grouped by their largest vertex: the point at which they close.
    let mut closing: Vec<Vec<u64>> = vec![Vec::new(); n];
    for (a, e) in g.edges().iter().enumerate() {
        closing[*e.last().unwrap()].push(masks[a]);
    }
    let mut out = Vec::new();
    let mut stack = vec![(0usize, 0u64)];
    while let Some((v, state)) = stack.pop() {
        if v == n {
            out.push(state);
            if out.len() > cap {
                return Err(Error::CapExceeded {
                    what: "independent-set count".into(),
                    size: out.len() as u128,
                    cap: cap as u128,
                });
            }
            continue;
        }
        let with = state | (1u64 << v);
        if closing[v].iter().all(|&m| with & m != m) {
            stack.push((v + 1, with));
        }
        stack.push((v + 1, state));
    }
    out.sort_unstable();
    Ok(out)
}

/// Exact transition kernel of the discrete-time chain on `Omega(g)`:
/// choose `v` uniformly, then with probability 1/2 set it to 0 and with
/// probability 1/2 set it to 1 unless blocked.
#[derive(Debug, Clone)]
pub struct DiscreteKernel {
    pub states: Vec<u64>,
    /// Sparse rows: `(target state index, probability)`.
    pub rows: Vec<Vec<(usize, f64)>>,
}

impl DiscreteKernel {
    pub fn build(g: &Hypergraph, cap: usize) -> Result<Self> {
        let states = enumerate_independent_sets(g, cap)?;
        let masks = g.edge_masks().expect("enumeration succeeded, so n <= 64");
        let index: HashMap<u64, usize> = states.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let n = g.n();
        let rows = states
            .iter()
            .map(|&s| {
                let mut row: HashMap<usize, f64> = HashMap::new();
                if n == 0 {
                    row.insert(index[&s], 1.0);
                }
                let w = 1.0 / (2.0 * n as f64);
                for v in 0..n {
                    let bit = 1u64 << v;
                    *row.entry(index[&(s & !bit)]).or_default() += w;
                    let up = s | bit;
                    let blocked = g.vertex_edges(v).iter().any(|&a| up & masks[a] == masks[a]);
                    let target = if blocked { s } else { up };
                    *row.entry(index[&target]).or_default() += w;
                }
                let mut row: Vec<(usize, f64)> = row.into_iter().collect();
                row.sort_unstable_by_key(|&(j, _)| j);
                row
            })
            .collect();
        Ok(DiscreteKernel { states, rows })
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Row vector times kernel.
    pub fn step(&self, dist: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; dist.len()];
        for (i, row) in self.rows.iter().enumerate() {
            let p = dist[i];
            if p == 0.0 {
                continue;
            }
            for &(j, w) in row {
                out[j] += p * w;
            }
        }
        out
    }
}

/// Fast discrete-time Glauber sampler keeping per-edge counts of ones so
/// that each step costs O(degree).
#[derive(Debug, Clone)]
pub struct DiscreteGlauber<'g> {
    g: &'g Hypergraph,
    config: Vec<bool>,
    ones_in_edge: Vec<usize>,
}

impl<'g> DiscreteGlauber<'g> {
    /// Starts from the all-zero configuration.
    pub fn new(g: &'g Hypergraph) -> Self {
        DiscreteGlauber {
            g,
            config: vec![false; g.n()],
            ones_in_edge: vec![0; g.edge_count()],
        }
    }

    pub fn reset(&mut self) {
        self.config.iter_mut().for_each(|b| *b = false);
        self.ones_in_edge.iter_mut().for_each(|c| *c = 0);
    }

    pub fn get(&self, v: usize) -> bool {
        self.config[v]
    }

    pub fn config(&self) -> SpinConfig {
        SpinConfig::from_bits(self.config.clone())
    }

    /// Applies the update rule at `v` with proposal `mark`.
    pub fn update(&mut self, v: usize, mark: bool) {
        let current = self.config[v];
        let k = self.g.k();
        let value = mark
            && !self
                .g
                .vertex_edges(v)
                .iter()
                .any(|&a| self.ones_in_edge[a] - usize::from(current) == k - 1);
        if value != current {
            for &a in self.g.vertex_edges(v) {
                if value {
                    self.ones_in_edge[a] += 1;
                } else {
                    self.ones_in_edge[a] -= 1;
                }
            }
            self.config[v] = value;
        }
    }

    pub fn step<R: rand::Rng + ?Sized>(&mut self, rng: &mut R) {
        let n = self.g.n();
        if n == 0 {
            return;
        }
        let v = rng.random_range(0..n);
        let mark = rng.random::<bool>();
        self.update(v, mark);
    }

    pub fn run<R: rand::Rng + ?Sized>(&mut self, steps: u64, rng: &mut R) {
        for _ in 0..steps {
            self.step(rng);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::rng_from_seed;
    use rand::Rng as _;

    fn ev(v: usize, t: f64, mark: bool) -> UpdateEvent {
        UpdateEvent {
            vertex: v,
            time: t,
            mark,
        }
    }

    #[test]
    fn unblocked_one_update_sets_vertex() {
        let g = Hypergraph::new(3, 2, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let x = apply_update(&g, &SpinConfig::zeros(3), &ev(1, 0.1, true));
        assert_eq!(x.to_string(), "010");
    }

    #[test]
    fn blocked_update_leaves_zero() {
        let g = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        let c = SpinConfig::from_bits(vec![false, true, true]);
        assert_eq!(apply_update(&g, &c, &ev(0, 0.1, true)).to_string(), "011");
    }

    #[test]
    fn zero_mark_always_clears() {
        let g = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        let c = SpinConfig::from_bits(vec![true, true, false]);
        assert_eq!(apply_update(&g, &c, &ev(0, 0.1, false)).to_string(), "010");
    }

    #[test]
    fn evolve_x_hand_fold() {
        // edge {1,2}: (1,0.5,1) sets vertex 1, then (2,0.7,1) is blocked.
        let g = Hypergraph::new(2, 2, vec![vec![0, 1]]).unwrap();
        let s = UpdateStream::new(2, 1.0, vec![ev(0, 0.5, true), ev(1, 0.7, true)]).unwrap();
        let z = SpinConfig::zeros(2);
        assert_eq!(evolve_x(&g, &z, &s, 0.0, 1.0).to_string(), "10");
        assert_eq!(evolve_x(&g, &z, &s, 0.3, 0.3), z);
        assert_eq!(evolve_x(&g, &z, &s, 0.5, 1.0).to_string(), "01");
    }

    #[test]
    fn evolve_y_examples() {
        let s = UpdateStream::new(2, 1.0, vec![ev(0, 0.5, false)]).unwrap();
        assert_eq!(evolve_y(2, &s, 0.0, 1.0).to_string(), "01");
        assert_eq!(evolve_y(2, &s, 0.7, 0.2), SpinConfig::ones(2));
        assert_eq!(evolve_y(2, &s, 0.5, 1.0), SpinConfig::ones(2));
    }

    #[test]
    fn enumeration_matches_definition() {
        let g = Hypergraph::new(3, 2, vec![vec![0, 1]]).unwrap();
        assert_eq!(
            enumerate_independent_sets(&g, 100).unwrap(),
            vec![0b000, 0b001, 0b010, 0b100, 0b101, 0b110]
        );
        assert!(enumerate_independent_sets(&g, 3).is_err());
        let empty = Hypergraph::empty(0, 2).unwrap();
        assert_eq!(enumerate_independent_sets(&empty, 1).unwrap(), vec![0]);
    }

    #[test]
    fn kernel_rows_are_stochastic() {
        let g = Hypergraph::new(4, 2, vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        let k = DiscreteKernel::build(&g, 1000).unwrap();
        for row in &k.rows {
            let s: f64 = row.iter().map(|&(_, p)| p).sum();
            assert!((s - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn fast_sampler_agrees_with_reference_update() {
        let g = Hypergraph::new(5, 3, vec![vec![0, 1, 2], vec![2, 3, 4], vec![0, 3, 4]]).unwrap();
        let mut fast = DiscreteGlauber::new(&g);
        let mut slow = SpinConfig::zeros(5);
        let mut rng = rng_from_seed(5);
        for i in 0..5000 {
            let v = rng.random_range(0..5);
            let mark = rng.random::<bool>();
            fast.update(v, mark);
            slow = apply_update(&g, &slow, &ev(v, i as f64, mark));
            assert_eq!(fast.config(), slow);
        }
    }
}
