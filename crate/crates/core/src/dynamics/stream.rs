//! The shared randomness of the grand coupling: a rate-1 Poisson clock per
//! vertex, each ring carrying an independent fair proposal bit.

use std::fmt::Write as _;

use rand::Rng as _;
use rand_distr::{Distribution, Exp1};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::rng_from_seed;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UpdateEvent {
    pub vertex: usize,
    pub time: f64,
    pub mark: bool,
}

/// Events on `[0, horizon]` in strictly increasing time order.
#[derive(Debug, Clone, PartialEq)]
pub struct UpdateStream {
    n: usize,
    horizon: f64,
    events: Vec<UpdateEvent>,
    // Indices into `events`, per vertex, ascending in time.
    by_vertex: Vec<Vec<usize>>,
}

impl UpdateStream {
    pub fn new(n: usize, horizon: f64, events: Vec<UpdateEvent>) -> Result<Self> {
        if horizon.is_nan() || horizon < 0.0 {
            return Err(Error::InvalidArgument(format!(
                "horizon must be nonnegative, got {horizon}"
            )));
        }
        for (i, e) in events.iter().enumerate() {
            if e.vertex >= n {
                return Err(Error::InvalidArgument(format!(
                    "event {i} names vertex {} outside 1..={n}",
                    e.vertex + 1
                )));
            }
            if !(e.time >= 0.0 && e.time <= horizon) {
                return Err(Error::InvalidArgument(format!(
                    "event {i} at time {} lies outside [0, {horizon}]",
                    e.time
                )));
            }
            if i > 0 && events[i - 1].time >= e.time {
                return Err(Error::InvalidArgument(format!(
                    "event times must be strictly increasing (event {i})"
                )));
            }
        }
        let mut by_vertex = vec![Vec::new(); n];
        for (i, e) in events.iter().enumerate() {
            by_vertex[e.vertex].push(i);
        }
        Ok(UpdateStream {
            n,
            horizon,
            events,
            by_vertex,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    pub fn events(&self) -> &[UpdateEvent] {
        &self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// Indices of the events at vertex `v`, in time order.
    pub fn vertex_events(&self, v: usize) -> &[usize] {
        &self.by_vertex[v]
    }

    /// Index range of events with `s < time <= t`.
    pub fn window(&self, s: f64, t: f64) -> std::ops::Range<usize> {
        let lo = self.events.partition_point(|e| e.time <= s);
        let hi = self.events.partition_point(|e| e.time <= t);
        lo..hi.max(lo)
    }

    /// Position within `vertex_events(v)` of the first event strictly after `t`.
    pub(crate) fn vertex_after(&self, v: usize, t: f64) -> usize {
        self.by_vertex[v].partition_point(|&i| self.events[i].time <= t)
    }

    /// Whether vertex `v` has an event in the half-open interval `[lo, hi)`.
    pub fn updated_in(&self, v: usize, lo: f64, hi: f64) -> bool {
        let idx = &self.by_vertex[v];
        let p = idx.partition_point(|&i| self.events[i].time < lo);
        p < idx.len() && self.events[idx[p]].time < hi
    }
}

/// Samples independent rate-1 Poisson clocks on `[0, horizon]` for each of
/// `n` vertices, with i.i.d. fair marks.
///
/// Vertices are drawn in order `0..n` and the merged list is stably sorted,
/// so simultaneous times (a null event) are broken by draw order; any tie
/// that survives is separated by one ulp to keep times strictly increasing.
pub fn sample_update_stream(n: usize, horizon: f64, seed: u64) -> UpdateStream {
    assert!(horizon >= 0.0, "horizon must be nonnegative");
    let mut rng = rng_from_seed(seed);
    let mut events = Vec::with_capacity((n as f64 * horizon * 1.1) as usize + 8);
    for v in 0..n {
        let mut t = 0.0;
        loop {
            let gap: f64 = Exp1.sample(&mut rng);
            t += gap;
            if t > horizon {
                break;
            }
            events.push(UpdateEvent {
                vertex: v,
                time: t,
                mark: rng.random::<bool>(),
            });
        }
    }
    events.sort_by(|a, b| a.time.total_cmp(&b.time));
    for i in 1..events.len() {
        if events[i].time <= events[i - 1].time {
            events[i].time = events[i - 1].time.next_up();
        }
    }
    events.retain(|e| e.time <= horizon);
    UpdateStream::new(n, horizon, events).expect("sampled stream is well formed")
}

/// One `v t mark` line per event (1-based `v`), preceded by a `# n horizon`
/// header. Times use 17 significant digits so replays are bit-exact.
pub fn serialize_stream(stream: &UpdateStream) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# n={} horizon={:.16e}", stream.n, stream.horizon);
    for e in &stream.events {
        let _ = writeln!(out, "{} {:.16e} {}", e.vertex + 1, e.time, u8::from(e.mark));
    }
    out
}

pub fn parse_stream(text: &str) -> Result<UpdateStream> {
    let mut n = None;
    let mut horizon = None;
    let mut events = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = raw.trim();
        if s.is_empty() {
            continue;
        }
        if let Some(meta) = s.strip_prefix('#') {
            for kv in meta.split_whitespace() {
                if let Some(v) = kv.strip_prefix("n=") {
                    n = v.parse::<usize>().ok();
                } else if let Some(v) = kv.strip_prefix("horizon=") {
                    horizon = v.parse::<f64>().ok();
                }
            }
            continue;
        }
        let bad = |reason: &str| Error::MalformedStream {
            line,
            reason: reason.to_string(),
        };
        let f: Vec<&str> = s.split_whitespace().collect();
        if f.len() != 3 {
            return Err(bad("expected `v t mark`"));
        }
        let v: usize = f[0].parse().map_err(|_| bad("bad vertex id"))?;
        let t: f64 = f[1].parse().map_err(|_| bad("bad time"))?;
        let mark = match f[2] {
            "0" => false,
            "1" => true,
            _ => return Err(bad("mark must be 0 or 1")),
        };
        if v == 0 {
            return Err(bad("vertex ids are 1-based"));
        }
        events.push(UpdateEvent {
            vertex: v - 1,
            time: t,
            mark,
        });
    }
    let n = n.ok_or(Error::MalformedStream {
        line: 1,
        reason: "missing `# n=` header".into(),
    })?;
    let horizon = horizon.ok_or(Error::MalformedStream {
        line: 1,
        reason: "missing `horizon=` header".into(),
    })?;
    UpdateStream::new(n, horizon, events)
}
