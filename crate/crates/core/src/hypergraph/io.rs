//! Text format: a header line `n m k`, then `m` lines of `k` 1-based vertex
//! ids. Lines starting with `#` are comments; blank lines are ignored.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::Serialize;

use super::Hypergraph;
use crate::error::{Error, Result};

struct Header {
    n: usize,
    m: usize,
    k: usize,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_header(line: usize, s: &str) -> Result<Header> {
    let fields: Vec<&str> = s.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(Error::MalformedHeader {
            line,
            reason: format!("expected `n m k`, found {} fields", fields.len()),
        });
    }
    let num = |name: &str, f: &str| -> Result<usize> {
        f.parse::<usize>().map_err(|_| Error::MalformedHeader {
            line,
            reason: format!("{name} is not a nonnegative integer: {f:?}"),
        })
    };
    let header = Header {
        n: num("n", fields[0])?,
        m: num("m", fields[1])?,
        k: num("k", fields[2])?,
    };
    if header.k == 0 {
        return Err(Error::MalformedHeader {
            line,
            reason: "k must be at least 1".into(),
        });
    }
    Ok(header)
}

fn parse_ids(line: usize, s: &str) -> Result<Vec<i64>> {
    s.split_whitespace()
        .map(|tok| {
            tok.parse::<i64>().map_err(|_| Error::MalformedEdge {
                line,
                reason: format!("not an integer vertex id: {tok:?}"),
            })
        })
        .collect()
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut lines = content_lines(text);
    let (hline, hs) = lines.next().ok_or(Error::MalformedHeader {
        line: 1,
        reason: "missing header".into(),
    })?;
    let Header { n, m, k, .. } = parse_header(hline, hs)?;

    let mut edges = Vec::with_capacity(m);
    let mut first_seen: HashMap<Vec<usize>, usize> = HashMap::with_capacity(m);
    for (line, s) in lines {
        let ids = parse_ids(line, s)?;
        if ids.len() != k {
            return Err(Error::EdgeSize {
                line,
                found: ids.len(),
                expected: k,
            });
        }
        let mut edge = Vec::with_capacity(k);
        for &id in &ids {
            if id < 1 || id as u64 > n as u64 {
                return Err(Error::VertexOutOfRange {
                    line,
                    vertex: id,
                    n,
                });
            }
            edge.push(id as usize - 1);
        }
        edge.sort_unstable();
        if let Some(w) = edge.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex {
                line,
                vertex: w[0] + 1,
            });
        }
        if let Some(&first_line) = first_seen.get(&edge) {
            return Err(Error::DuplicateEdge { line, first_line });
        }
        first_seen.insert(edge.clone(), line);
        edges.push(edge);
    }
    if edges.len() != m {
        return Err(Error::EdgeCount {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Hypergraph::from_checked(n, k, edges))
}

pub fn serialize_hypergraph(g: &Hypergraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {} {}", g.n(), g.edge_count(), g.k());
    for e in g.edges() {
        let line: Vec<String> = e.iter().map(|v| (v + 1).to_string()).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

/// Defect inventory of a hypergraph file, gathered without stopping at the
/// first problem.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub n: usize,
    pub declared_edges: usize,
    pub found_edges: usize,
    pub k: usize,
    pub is_k_uniform: bool,
    /// degree -> number of vertices with that degree
    pub observed_degrees: BTreeMap<usize, usize>,
    /// (line, line of first occurrence) for each repeated edge
    pub duplicate_edges: Vec<(usize, usize)>,
    /// (line, offending id)
    pub out_of_range_vertices: Vec<(usize, i64)>,
    /// (line, repeated id)
    pub repeated_vertices: Vec<(usize, usize)>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.is_k_uniform
            && self.declared_edges == self.found_edges
            && self.duplicate_edges.is_empty()
            && self.out_of_range_vertices.is_empty()
            && self.repeated_vertices.is_empty()
    }
}

/// Lenient pass over a hypergraph file. Only an unreadable header or a
/// non-integer token is fatal; every other defect lands in the report.
pub fn validate_text(text: &str) -> Result<ValidationReport> {
    let mut lines = content_lines(text);
    let (hline, hs) = lines.next().ok_or(Error::MalformedHeader {
        line: 1,
        reason: "missing header".into(),
    })?;
    let header = parse_header(hline, hs)?;
    let mut report = ValidationReport {
        n: header.n,
        declared_edges: header.m,
        found_edges: 0,
        k: header.k,
        is_k_uniform: true,
        observed_degrees: BTreeMap::new(),
        duplicate_edges: Vec::new(),
        out_of_range_vertices: Vec::new(),
        repeated_vertices: Vec::new(),
    };
    let mut degrees = vec![0usize; header.n];
    let mut first_seen: HashMap<Vec<i64>, usize> = HashMap::new();
    for (line, s) in lines {
        let mut ids = parse_ids(line, s)?;
        report.found_edges += 1;
        if ids.len() != header.k {
            report.is_k_uniform = false;
        }
        for &id in &ids {
            if id < 1 || id as u64 > header.n as u64 {
                report.out_of_range_vertices.push((line, id));
            }
        }
        ids.sort_unstable();
        let mut distinct = ids.clone();
        distinct.dedup();
        for w in ids.windows(2).filter(|w| w[0] == w[1]) {
            if w[0] >= 1 {
                report.repeated_vertices.push((line, w[0] as usize));
            }
        }
        for &id in &distinct {
            if id >= 1 && (id as u64) <= header.n as u64 {
                degrees[id as usize - 1] += 1;
            }
        }
        match first_seen.get(&ids) {
            Some(&first) => report.duplicate_edges.push((line, first)),
            None => {
                first_seen.insert(ids, line);
            }
        }
    }
    report.repeated_vertices.dedup();
    for d in degrees {
        *report.observed_degrees.entry(d).or_insert(0) += 1;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_single_edge() {
        let g = parse_hypergraph("3 1 3\n1 2 3\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.k(), 3);
        assert_eq!(g.edges(), &[vec![0, 1, 2]]);
        assert_eq!(g.max_degree(), 1);
    }

    #[test]
    fn parses_empty_edge_set() {
        let g = parse_hypergraph("2 0 2\n").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let g = parse_hypergraph("# a graph\n\n3 1 2\n# edge\n2 1\n").unwrap();
        assert_eq!(g.edges(), &[vec![0, 1]]);
    }

    #[test]
    fn each_defect_is_a_distinct_error_naming_its_line() {
        assert!(matches!(
            parse_hypergraph("3 1 3\n1 1 2\n"),
            Err(Error::DuplicateVertex { line: 2, vertex: 1 })
        ));
        assert!(matches!(
            parse_hypergraph("3 1\n1 2 3\n"),
            Err(Error::MalformedHeader { line: 1, .. })
        ));
        assert!(matches!(
            parse_hypergraph("3 1 3\n1 2 4\n"),
            Err(Error::VertexOutOfRange {
                line: 2,
                vertex: 4,
                ..
            })
        ));
        assert!(matches!(
            parse_hypergraph("3 1 3\n1 2\n"),
            Err(Error::EdgeSize {
                line: 2,
                found: 2,
                expected: 3
            })
        ));
        assert!(matches!(
            parse_hypergraph("# c\n3 2 2\n1 2\n2 1\n"),
            Err(Error::DuplicateEdge {
                line: 4,
                first_line: 3
            })
        ));
        assert!(matches!(
            parse_hypergraph("3 2 2\n1 2\n"),
            Err(Error::EdgeCount {
                declared: 2,
                found: 1
            })
        ));
        assert!(matches!(
            parse_hypergraph("3 1 2\n1 x\n"),
            Err(Error::MalformedEdge { line: 2, .. })
        ));
        assert!(matches!(
            parse_hypergraph("3 1 2\n0 1\n"),
            Err(Error::VertexOutOfRange { vertex: 0, .. })
        ));
    }

    #[test]
    fn serialization_sorts_within_edges_and_keeps_edge_order() {
        let g = parse_hypergraph("5 2 3\n5 4 3\n3 1 2\n").unwrap();
        assert_eq!(serialize_hypergraph(&g), "5 2 3\n3 4 5\n1 2 3\n");
    }

    #[test]
    fn validation_collects_every_defect() {
        let r = validate_text("4 3 3\n1 2 3\n1 1 9\n3 2 1\n").unwrap();
        assert!(!r.is_clean());
        assert!(r.is_k_uniform);
        assert_eq!(r.duplicate_edges, vec![(4, 2)]);
        assert_eq!(r.out_of_range_vertices, vec![(3, 9)]);
        assert_eq!(r.repeated_vertices, vec![(3, 1)]);

        let clean = validate_text("4 2 2\n1 2\n3 4\n").unwrap();
        assert!(clean.is_clean());
        assert_eq!(clean.observed_degrees, BTreeMap::from([(1, 4)]));
    }
}
