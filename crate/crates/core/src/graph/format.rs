//! Text encodings: graph6 (bit-exact, optional `>>graph6<<` header) and a
//! human-oriented adjacency list with one `v: w1 w2 ...` line per vertex.

use std::fmt::Write as _;

use thiserror::Error;

use super::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("graph6 byte {pos}: {msg}")]
    Graph6 { pos: usize, msg: String },
    #[error("adjacency list line {line}: {msg}")]
    Adjacency { line: usize, msg: String },
}

const HEADER: &str = ">>graph6<<";

fn g6_err(pos: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Graph6 { pos, msg: msg.into() }
}

/// Parses one graph6 string (surrounding whitespace ignored).
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let trimmed = text.trim();
    let offset = text.find(trimmed).unwrap_or(0);
    let (body, offset) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (rest, offset + HEADER.len()),
        None => (trimmed, offset),
    };
    let bytes = body.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_err(offset + i, format!("byte {b:#04x} outside graph6 range 63..=126")));
        }
    }
    if bytes.is_empty() {
        return Err(g6_err(offset, "empty graph6 string"));
    }
    let six = |i: usize| -> Result<usize, ParseError> {
        bytes
            .get(i)
            .map(|&b| (b - 63) as usize)
            .ok_or_else(|| g6_err(offset + i, "truncated vertex count"))
    };
    let (n, mut pos) = if bytes[0] != 126 {
        (six(0)?, 1)
    } else if bytes.get(1) != Some(&126) {
        ((six(1)? << 12) | (six(2)? << 6) | six(3)?, 4)
    } else {
        let mut n = 0;
        for i in 2..8 {
            n = (n << 6) | six(i)?;
        }
        (n, 8)
    };
    let bits_needed = n * n.saturating_sub(1) / 2;
    let bytes_needed = bits_needed.div_ceil(6);
    let data = &bytes[pos..];
    if data.len() != bytes_needed {
        return Err(g6_err(
            offset + pos + data.len().min(bytes_needed),
            format!("expected {bytes_needed} adjacency bytes for n = {n}, found {}", data.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = (data[bit / 6] - 63) as usize;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    if bit % 6 != 0 {
        let last = (data[bit / 6] - 63) as usize;
        if last & ((1 << (6 - bit % 6)) - 1) != 0 {
            pos += bit / 6;
            return Err(g6_err(offset + pos, "nonzero padding bits"));
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("graph6 edges are in range and loop-free"))
}

/// graph6 encoding without header.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses `v: w1 w2 ...` lines. Blank lines and `#` comments are skipped;
/// edges may be listed from either end or both. The vertex count is one
/// more than the largest label mentioned.
pub fn parse_adjacency_list(text: &str) -> Result<Graph, ParseError> {
    let mut edges = Vec::new();
    let mut max_label: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| ParseError::Adjacency { line: line_no, msg };
        let (head, tail) = line.split_once(':').ok_or_else(|| err("missing ':'".into()))?;
        let v: usize = head
            .trim()
            .parse()
            .map_err(|_| err(format!("bad vertex label {:?}", head.trim())))?;
        max_label = Some(max_label.map_or(v, |m| m.max(v)));
        for tok in tail.split_whitespace() {
            let w: usize = tok.parse().map_err(|_| err(format!("bad neighbor {tok:?}")))?;
            if w == v {
                return Err(err(format!("self-loop at {v}")));
            }
            max_label = Some(max_label.map_or(w, |m| m.max(w)));
            edges.push((v, w));
        }
    }
    let n = max_label.map_or(0, |m| m + 1);
    Ok(Graph::from_edges(n, &edges).expect("labels bounded by n, loops rejected"))
}

pub fn to_adjacency_list(g: &Graph) -> String {
    let mut out = String::new();
    for v in 0..g.n() {
        let _ = write!(out, "{v}:");
        for w in g.neighbors(v) {
            let _ = write!(out, " {w}");
        }
        out.push('\n');
    }
    out
}

/// Either format, chosen by whether the first meaningful line has a colon.
pub fn parse_any(text: &str) -> Result<Graph, ParseError> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if first.contains(':') {
        parse_adjacency_list(text)
    } else {
        parse_graph6(first)
    }
}

#[cfg(test)]
mod tests {
    use super::super::families::*;
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_encodings() {
        // 5 vertices, edges 0-2, 0-4, 1-3, 3-4
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
        assert_eq!(parse_graph6(">>graph6<<DQc\n").unwrap(), g);
        assert_eq!(to_graph6(&complete(5)), "D~{");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
    }

    #[test]
    fn long_vertex_count() {
        let g = cycle(100);
        let s = to_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 99][..]);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn malformed_graph6_reports_position() {
        assert!(matches!(parse_graph6("D Qc"), Err(ParseError::Graph6 { pos: 1, .. })));
        assert!(matches!(parse_graph6("DQ"), Err(ParseError::Graph6 { .. })));
        assert!(matches!(parse_graph6("DQcc"), Err(ParseError::Graph6 { .. })));
        assert!(parse_graph6("").is_err());
    }

    #[test]
    fn adjacency_list_parsing() {
        let g = parse_adjacency_list("# triangle\n0: 1 2\n1: 2\n\n2:\n").unwrap();
        assert_eq!(g, cycle(3));
        assert!(matches!(
            parse_adjacency_list("0: 1\n1 2\n"),
            Err(ParseError::Adjacency { line: 2, .. })
        ));
        assert!(matches!(parse_adjacency_list("0: x\n"), Err(ParseError::Adjacency { line: 1, .. })));
        assert_eq!(parse_any("0: 1 2\n1: 2\n").unwrap(), cycle(3));
        assert_eq!(parse_any("DQc\n").unwrap().m(), 4);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..70).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn round_trips(g in arb_graph()) {
            prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g.clone());
            let adj = parse_adjacency_list(&to_adjacency_list(&g)).unwrap();
            prop_assert_eq!(adj, g);
        }
    }
}
