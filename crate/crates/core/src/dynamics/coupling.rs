use serde::{Deserialize, Serialize};

use super::{enumerate_independent_sets, Ternary, TernaryConfig, UpdateStream};
use crate::error::Result;
use crate::hypergraph::Hypergraph;

pub const DEFAULT_STATE_CAP: usize = 1 << 20;

/// When the grand coupling is known to have coalesced.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CouplingTime {
    /// Coalesced at `time`, after `events` updates of the stream.
    At {
        time: f64,
        events: usize,
    },
    NotByHorizon,
}

impl CouplingTime {
    pub fn time(&self) -> Option<f64> {
        match *self {
            CouplingTime::At { time, .. } => Some(time),
            CouplingTime::NotByHorizon => None,
        }
    }

    pub fn events(&self) -> Option<usize> {
        match *self {
            CouplingTime::At { events, .. } => Some(events),
            CouplingTime::NotByHorizon => None,
        }
    }
}

/// Trajectory of the ternary certificate, stored as a change log.
#[derive(Debug, Clone, PartialEq)]
pub struct CertificateRun {
    /// `(event index, vertex, new value)` for every event that changed a value.
    pub changes: Vec<(usize, usize, Ternary)>,
    pub certified: CouplingTime,
    n: usize,
}

impl CertificateRun {
    /// Ternary state after the first `events` updates.
    pub fn state_after(&self, events: usize) -> TernaryConfig {
        let mut c = TernaryConfig::unknown(self.n);
        for &(i, v, s) in &self.changes {
            if i >= events {
                break;
            }
            c.states[v] = s;
        }
        c
    }
}

/// Runs every chain of the grand coupling at once in the three-valued
/// abstraction `{0, 1, ?}`, starting from all-unknown:
///
/// * `(v, t, 0)` sets `v = 0`;
/// * `(v, t, 1)` sets `v = 0` if some edge of `v` has all other vertices
///   at 1, `v = 1` if every edge of `v` has another vertex at 0, and
///   `v = ?` otherwise.
///
/// Once nothing is unknown all chains agree, so the first such time is an
/// upper bound on the coupling time.
pub fn coupling_certificate(g: &Hypergraph, stream: &UpdateStream) -> CertificateRun {
    let n = g.n();
    let k = g.k();
    let mut state = vec![Ternary::Unknown; n];
    let mut ones = vec![0usize; g.edge_count()];
    let mut zeros = vec![0usize; g.edge_count()];
    let mut unknown = n;
    let mut changes = Vec::new();
    let mut certified = if n == 0 {
        CouplingTime::At {
            time: 0.0,
            events: 0,
        }
    } else {
        CouplingTime::NotByHorizon
    };
    for (i, e) in stream.events().iter().enumerate() {
        let v = e.vertex;
        let old = state[v];
        let new = if !e.mark {
            Ternary::Zero
        } else {
            let own_one = usize::from(old == Ternary::One);
            let own_zero = usize::from(old == Ternary::Zero);
            let edges = g.vertex_edges(v);
            if edges.iter().any(|&a| ones[a] - own_one == k - 1) {
                Ternary::Zero
            } else if edges.iter().all(|&a| zeros[a] - own_zero >= 1) {
                Ternary::One
            } else {
                Ternary::Unknown
            }
        };
        if new != old {
            for &a in g.vertex_edges(v) {
                match old {
                    Ternary::One => ones[a] -= 1,
                    Ternary::Zero => zeros[a] -= 1,
                    Ternary::Unknown => {}
                }
                match new {
                    Ternary::One => ones[a] += 1,
                    Ternary::Zero => zeros[a] += 1,
                    Ternary::Unknown => {}
                }
            }
            if old == Ternary::Unknown {
                unknown -= 1;
            }
            if new == Ternary::Unknown {
                unknown += 1;
            }
            state[v] = new;
            changes.push((i, v, new));
        }
        if unknown == 0 && certified == CouplingTime::NotByHorizon {
            certified = CouplingTime::At {
                time: e.time,
                events: i + 1,
            };
        }
    }
    CertificateRun {
        changes,
        certified,
        n,
    }
}

/// Exact coupling time: evolves every independent set under the shared
/// stream and reports the first event after which all of them agree.
pub fn t_coup_exhaustive(
    g: &Hypergraph,
    stream: &UpdateStream,
    cap: usize,
) -> Result<CouplingTime> {
    let mut states = enumerate_independent_sets(g, cap)?;
    if states.len() <= 1 {
        return Ok(CouplingTime::At {
            time: 0.0,
            events: 0,
        });
    }
    let masks = g.edge_masks().expect("enumeration succeeded, so n <= 64");
    for (i, e) in stream.events().iter().enumerate() {
        let bit = 1u64 << e.vertex;
        let blockers: Vec<u64> = g.vertex_edges(e.vertex).iter().map(|&a| masks[a]).collect();
        for s in states.iter_mut() {
            let up = *s | bit;
            *s = if e.mark && !blockers.iter().any(|&m| m & !up == 0) {
                up
            } else {
                *s & !bit
            };
        }
        states.sort_unstable();
        states.dedup();
        if states.len() == 1 {
            return Ok(CouplingTime::At {
                time: e.time,
                events: i + 1,
            });
        }
    }
    Ok(CouplingTime::NotByHorizon)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CouplingReport {
    pub horizon: f64,
    pub certified: CouplingTime,
    /// Present when the exhaustive oracle was run.
    pub exhaustive: Option<CouplingTime>,
}

/// Certificate plus, optionally, the exhaustive oracle.
pub fn coupling_report(
    g: &Hypergraph,
    stream: &UpdateStream,
    exhaustive_cap: Option<usize>,
) -> Result<CouplingReport> {
    let certified = coupling_certificate(g, stream).certified;
    let exhaustive = exhaustive_cap
        .map(|cap| t_coup_exhaustive(g, stream, cap))
        .transpose()?;
    Ok(CouplingReport {
        horizon: stream.horizon(),
        certified,
        exhaustive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::UpdateEvent;

    fn ev(v: usize, t: f64, mark: bool) -> UpdateEvent {
        UpdateEvent {
            vertex: v,
            time: t,
            mark,
        }
    }

    #[test]
    fn two_zero_updates_certify_single_edge() {
        let g = Hypergraph::new(2, 2, vec![vec![0, 1]]).unwrap();
        let s = UpdateStream::new(2, 3.0, vec![ev(0, 0.4, false), ev(1, 1.3, false)]).unwrap();
        let run = coupling_certificate(&g, &s);
        assert_eq!(
            run.certified,
            CouplingTime::At {
                time: 1.3,
                events: 2
            }
        );
        assert_eq!(run.state_after(1).to_string(), "0?");
    }

    #[test]
    fn undecidable_one_update_stays_unknown() {
        let g = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        let s = UpdateStream::new(3, 1.0, vec![ev(0, 0.5, true)]).unwrap();
        let run = coupling_certificate(&g, &s);
        assert_eq!(run.state_after(1).to_string(), "???");
        assert_eq!(run.certified, CouplingTime::NotByHorizon);
    }

    #[test]
    fn edgeless_graph_certifies_at_last_first_update() {
        let g = Hypergraph::empty(3, 2).unwrap();
        let s = UpdateStream::new(
            3,
            5.0,
            vec![
                ev(1, 0.2, true),
                ev(0, 0.9, false),
                ev(1, 1.1, false),
                ev(2, 2.5, true),
            ],
        )
        .unwrap();
        assert_eq!(coupling_certificate(&g, &s).certified.time(), Some(2.5));
        assert_eq!(t_coup_exhaustive(&g, &s, 100).unwrap().time(), Some(2.5));
    }

    #[test]
    fn exhaustive_trivial_cases() {
        let g = Hypergraph::empty(0, 2).unwrap();
        let s = UpdateStream::new(0, 1.0, vec![]).unwrap();
        assert_eq!(t_coup_exhaustive(&g, &s, 10).unwrap().time(), Some(0.0));

        let g = Hypergraph::empty(1, 2).unwrap();
        let s = UpdateStream::new(1, 2.0, vec![ev(0, 0.7, true), ev(0, 1.2, false)]).unwrap();
        assert_eq!(t_coup_exhaustive(&g, &s, 10).unwrap().time(), Some(0.7));
    }

    #[test]
    fn exhaustive_cap_is_enforced() {
        let g = Hypergraph::empty(5, 2).unwrap();
        let s = UpdateStream::new(5, 1.0, vec![]).unwrap();
        assert!(t_coup_exhaustive(&g, &s, 16).is_err());
    }
}
