//! Deactivation and activation times.
//!
//! "No further event" is reported as `f64::INFINITY`; it is returned for any
//! query whose answer lies past the stream horizon.

use super::UpdateStream;
use crate::hypergraph::Hypergraph;

/// First update time at `v` strictly after `t`.
pub fn t_plus(stream: &UpdateStream, v: usize, t: f64) -> f64 {
    let idx = stream.vertex_events(v);
    let p = stream.vertex_after(v, t);
    idx.get(p)
        .map(|&i| stream.events()[i].time)
        .unwrap_or(f64::INFINITY)
}

/// Deactivation time of `v` relative to edge `b`: `t` when `v` is not in `b`.
pub fn t_plus_rel(g: &Hypergraph, stream: &UpdateStream, v: usize, b: usize, t: f64) -> f64 {
    if g.edge(b).binary_search(&v).is_ok() {
        t_plus(stream, v, t)
    } else {
        t
    }
}

/// Deactivation time of edge `a` relative to edge `b`.
pub fn t_plus_edge(g: &Hypergraph, stream: &UpdateStream, a: usize, b: usize, t: f64) -> f64 {
    g.edge(a)
        .iter()
        .map(|&v| t_plus_rel(g, stream, v, b, t))
        .fold(t, f64::max)
}

/// `Y_{s,t}(u)`: the mark of the last update at `u` in `(s, t]`, or 1.
pub fn y_value(stream: &UpdateStream, u: usize, s: f64, t: f64) -> bool {
    if t <= s {
        return true;
    }
    let idx = stream.vertex_events(u);
    let p = stream.vertex_after(u, t);
    if p == 0 {
        return true;
    }
    let e = &stream.events()[idx[p - 1]];
    if e.time > s {
        e.mark
    } else {
        true
    }
}

/// Whether `(v, a)` is `s`-activated at time `t`: the stream holds the
/// update `(v, t, 1)` and `Y_{s,t}` is all-ones on `a`. Every pair counts
/// as activated at time 0.
pub fn is_activated(
    g: &Hypergraph,
    stream: &UpdateStream,
    v: usize,
    a: usize,
    t: f64,
    s: f64,
) -> bool {
    assert!(g.edge(a).contains(&v), "vertex {v} is not in edge {a}");
    if t == 0.0 {
        return true;
    }
    let idx = stream.vertex_events(v);
    let p = stream.vertex_after(v, t);
    let has_one_update = p > 0 && {
        let e = &stream.events()[idx[p - 1]];
        e.time == t && e.mark
    };
    has_one_update && g.edge(a).iter().all(|&u| y_value(stream, u, s, t))
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
    fn t_plus_examples() {
        let s = UpdateStream::new(2, 5.0, vec![ev(0, 1.5, true), ev(0, 2.7, false)]).unwrap();
        assert_eq!(t_plus(&s, 0, 1.0), 1.5);
        assert_eq!(t_plus(&s, 0, 2.0), 2.7);
        assert_eq!(t_plus(&s, 0, 1.5), 2.7);
        assert_eq!(t_plus(&s, 0, 3.0), f64::INFINITY);
        assert_eq!(t_plus(&s, 1, 0.0), f64::INFINITY);
    }

    #[test]
    fn relative_times_degenerate_outside_b() {
        let g = Hypergraph::new(4, 2, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let s = UpdateStream::new(4, 5.0, vec![ev(0, 1.5, true), ev(1, 2.5, true)]).unwrap();
        assert_eq!(t_plus_rel(&g, &s, 0, 1, 1.0), 1.0);
        assert_eq!(t_plus_rel(&g, &s, 0, 0, 1.0), 1.5);
        assert_eq!(t_plus_edge(&g, &s, 0, 1, 1.0), 1.0);
        assert_eq!(t_plus_edge(&g, &s, 0, 0, 1.0), 2.5);
        assert_eq!(t_plus_edge(&g, &s, 0, 0, 2.0), f64::INFINITY);
    }

    #[test]
    fn activation_examples() {
        let g = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        let s = UpdateStream::new(
            3,
            5.0,
            vec![
                ev(1, 0.5, false),
                ev(0, 1.0, true),
                ev(1, 2.0, true),
                ev(2, 3.0, true),
            ],
        )
        .unwrap();
        assert!(is_activated(&g, &s, 2, 0, 0.0, 0.0));
        // no update (v, t, 1) at this time
        assert!(!is_activated(&g, &s, 0, 0, 1.1, 0.0));
        // vertex 2 (index 1) holds a 0-mark in (0, 1]
        assert!(!is_activated(&g, &s, 0, 0, 1.0, 0.0));
        // ...but not in (0.6, 1]
        assert!(is_activated(&g, &s, 0, 0, 1.0, 0.6));
        // the 0-mark has been overwritten by 2.0
        assert!(is_activated(&g, &s, 2, 0, 3.0, 0.0));
        assert!(!y_value(&s, 1, 0.0, 0.5));
        assert!(y_value(&s, 1, 0.5, 1.0));
    }
}
