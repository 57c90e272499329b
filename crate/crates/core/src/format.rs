//! Text formats: graph6 (short form, n <= 62) and the signed edge list `.sg`.
//!
//! `.sg` layout:
//!
//! ```text
//! n m
//! u v s      (m lines, s is + or -, 0-based, u < v, sorted)
//! ```
//!
//! Blank lines and `#` comments are skipped when reading.

use thiserror::Error;

use crate::graph::{GraphError, Sign, SignedGraph};

/// Largest order representable by the one-byte graph6 header.
pub const GRAPH6_MAX_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("graph6: malformed header byte {0:#04x}")]
    Graph6Header(u8),
    #[error("graph6: expected {expected} data bytes, found {found}")]
    Graph6Truncated { expected: usize, found: usize },
    #[error("graph6: invalid data byte {byte:#04x} at offset {offset}")]
    Graph6BadByte { byte: u8, offset: usize },
    #[error("graph6: order {0} needs the long form, which is not supported")]
    Graph6TooLarge(usize),
    #[error("sg line {line}: malformed header, expected `n m`")]
    SgHeader { line: usize },
    #[error("sg line {line}: malformed edge line")]
    SgEdge { line: usize },
    #[error("sg line {line}: bad sign token `{token}`")]
    SgBadSign { line: usize, token: String },
    #[error("sg: header declares {declared} edges, found {found}")]
    SgEdgeCount { declared: usize, found: usize },
    #[error("sg line {line}: {source}")]
    SgGraph {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("empty input")]
    Empty,
}

fn graph6_data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 line into an all-positive graph.
pub fn parse_graph6(line: &str) -> Result<SignedGraph, FormatError> {
    let bytes = line.trim_end().as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    let (&head, data) = bytes.split_first().ok_or(FormatError::Empty)?;
    if head == 126 {
        return Err(FormatError::Graph6TooLarge(GRAPH6_MAX_ORDER + 1));
    }
    // order 0 has no signed-graph counterpart
    if !(64..126).contains(&head) {
        return Err(FormatError::Graph6Header(head));
    }
    let n = (head - 63) as usize;
    let expected = graph6_data_len(n);
    if data.len() < expected {
        return Err(FormatError::Graph6Truncated {
            expected,
            found: data.len(),
        });
    }
    if data.len() > expected {
        return Err(FormatError::Graph6BadByte {
            byte: data[expected],
            offset: expected + 1,
        });
    }
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(FormatError::Graph6BadByte { byte: b, offset: i + 1 });
        }
    }
    let mut g = SignedGraph::empty(n).expect("order checked");
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let bit = (data[k / 6] - 63) >> (5 - k % 6) & 1;
            if bit == 1 {
                g.set_edge(u, v, Some(Sign::Pos));
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes the underlying graph in graph6; signs are dropped.
pub fn write_graph6(g: &SignedGraph) -> Result<String, FormatError> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(FormatError::Graph6TooLarge(n));
    }
    let mut out = String::with_capacity(1 + graph6_data_len(n));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push((acc + 63) as char);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push(((acc << (6 - k % 6)) + 63) as char);
    }
    Ok(out)
}

/// Canonical `.sg` text: header then edges in lexicographic order.
pub fn write_sg(g: &SignedGraph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v, s) in edges {
        out.push_str(&format!("{u} {v} {s}\n"));
    }
    out
}

pub fn parse_sg(text: &str) -> Result<SignedGraph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or(FormatError::Empty)?;
    let nums: Vec<usize> = header
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<_, _>>()
        .map_err(|_| FormatError::SgHeader { line: hline })?;
    let [n, m] = nums[..] else {
        return Err(FormatError::SgHeader { line: hline });
    };
    let mut g = SignedGraph::empty(n).map_err(|source| FormatError::SgGraph { line: hline, source })?;

    let mut found = 0;
    for (line, body) in lines {
        let toks: Vec<&str> = body.split_whitespace().collect();
        let [u, v, s] = toks[..] else {
            return Err(FormatError::SgEdge { line });
        };
        let u: usize = u.parse().map_err(|_| FormatError::SgEdge { line })?;
        let v: usize = v.parse().map_err(|_| FormatError::SgEdge { line })?;
        let sign = match s {
            "+" => Sign::Pos,
            "-" => Sign::Neg,
            other => {
                return Err(FormatError::SgBadSign {
                    line,
                    token: other.to_string(),
                })
            }
        };
        g.try_add_edge(u, v, sign)
            .map_err(|source| FormatError::SgGraph { line, source })?;
        found += 1;
    }
    if found != m {
        return Err(FormatError::SgEdgeCount { declared: m, found });
    }
    Ok(g)
}
