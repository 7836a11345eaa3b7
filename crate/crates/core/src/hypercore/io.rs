//! Plain-text edge-list format.
//!
//! ```text
//! # optional comment lines
//! n r m
//! v_1 ... v_r      (m lines, strictly increasing indices)
//! ```
//!
//! Graphs use the same layout with `r = 2`.

use std::fmt::Write as _;

use crate::error::{Error, Result};

use super::{Graph, Hypergraph};

/// Non-comment, non-blank lines paired with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_fields(line: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line,
                message: format!("expected a non-negative integer, found {tok:?}"),
            })
        })
        .collect()
}

pub fn read_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header line `n r m`".into(),
    })?;
    let header = parse_fields(header_line, header)?;
    let [n, r, m] = header[..] else {
        return Err(Error::Parse {
            line: header_line,
            message: format!("header must have 3 fields, found {}", header.len()),
        });
    };

    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, text) in lines {
        last_line = line;
        if edges.len() == m {
            return Err(Error::Parse { line, message: format!("more than the declared {m} edges") });
        }
        let edge = parse_fields(line, text)?;
        if edge.len() != r {
            return Err(Error::Parse {
                line,
                message: format!("edge has {} vertices, expected {r}", edge.len()),
            });
        }
        if let Some(&vertex) = edge.iter().find(|&&v| v >= n) {
            return Err(Error::Range { line, vertex, n });
        }
        if edge.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse { line, message: "edge vertices must be strictly increasing".into() });
        }
        edges.push(edge);
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: last_line,
            message: format!("declared {m} edges, found {}", edges.len()),
        });
    }
    Hypergraph::new(n, r, edges)
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {} {}", h.n(), h.r(), h.edge_count()).unwrap();
    for e in h.edges() {
        write_row(&mut out, e);
    }
    out
}

pub fn read_graph(text: &str) -> Result<Graph> {
    let h = read_hypergraph(text)?;
    h.to_graph().ok_or(Error::Parse { line: 1, message: format!("graph files need r = 2, found r = {}", h.r()) })
}

pub fn write_graph(g: &Graph) -> String {
    write_hypergraph(&Hypergraph::from(g))
}

pub(crate) fn write_row(out: &mut String, row: &[usize]) {
    let mut first = true;
    for v in row {
        if !first {
            out.push(' ');
        }
        first = false;
        write!(out, "{v}").unwrap();
    }
    out.push('\n');
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reads_single_edge() {
        let h = read_hypergraph("4 3 1\n0 1 2\n").unwrap();
        assert_eq!((h.n(), h.r(), h.edge_count()), (4, 3, 1));
        assert_eq!(h.edge(0), &[0, 1, 2]);
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let h = read_hypergraph("# triangle\n\n3 2 3\n0 1\n# middle\n0 2\n1 2\n").unwrap();
        assert_eq!(h.edge_count(), 3);
    }

    #[test]
    fn range_error_carries_line() {
        assert_eq!(read_hypergraph("3 3 1\n0 1 5\n"), Err(Error::Range { line: 2, vertex: 5, n: 3 }));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(read_hypergraph(""), Err(Error::Parse { .. })));
        assert!(matches!(read_hypergraph("4 3\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(read_hypergraph("4 3 1\n0 x 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(read_hypergraph("4 3 1\n2 1 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(read_hypergraph("4 3 2\n0 1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(read_hypergraph("4 3 1\n0 1 2\n1 2 3\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(read_hypergraph("4 3 2\n0 1 2\n0 1 2\n"), Err(Error::Invalid(_))));
    }

    #[test]
    fn graph_files_need_r2() {
        assert!(read_graph("3 3 1\n0 1 2\n").is_err());
        let g = read_graph("3 2 2\n0 1\n1 2\n").unwrap();
        assert_eq!(write_graph(&g), "3 2 2\n0 1\n1 2\n");
    }

    proptest! {
        #[test]
        fn canonical_text_round_trips(n in 3usize..12, picks in proptest::collection::vec(any::<u64>(), 0..20)) {
            let edges: Vec<Vec<usize>> = picks
                .iter()
                .map(|p| {
                    let a = (*p as usize) % n;
                    let b = (a + 1 + (*p >> 8) as usize % (n - 1)) % n;
                    vec![a.min(b), a.max(b)]
                })
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
            let h = Hypergraph::new(n, 2, edges).unwrap();
            let text = write_hypergraph(&h);
            let back = read_hypergraph(&text).unwrap();
            prop_assert_eq!(&back, &h);
            prop_assert_eq!(write_hypergraph(&back), text);
        }
    }
}
