//! Graph file formats: graph6, DIMACS, and plain edge lists.
//!
//! graph6 is encoded bit-exactly: the size header `N(n)` is one byte
//! `n + 63` for `n <= 62`, byte 126 followed by three 6-bit groups for
//! `63 <= n <= 258047`, and bytes 126 126 followed by six 6-bit groups up
//! to `n = 68719476735`. The upper-triangle adjacency bits follow in
//! column-major order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed
//! big-endian into 6-bit groups, zero-padded, each group offset by 63.
//! An optional `>>graph6<<` prefix is accepted on parse.
//!
//! DIMACS files have a `p edge N M` problem line, `e u v` edge lines with
//! 1-based vertex ids, and `c` comment lines.
//!
//! Edge lists have one `u v` pair per line with 0-based ids and `#`
//! comments; an optional first line `n N` pins the vertex count, which
//! otherwise defaults to the largest id plus one.

use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;

/// Supported on-disk graph formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    Dimacs,
    EdgeList,
}

impl GraphFormat {
    /// Format implied by a file extension, if any (`.g6`, `.col`,
    /// `.dimacs`, `.edges`).
    pub fn from_extension(path: &str) -> Option<GraphFormat> {
        let ext = path.rsplit('.').next()?;
        match ext {
            "g6" => Some(GraphFormat::Graph6),
            "col" | "dimacs" => Some(GraphFormat::Dimacs),
            "edges" | "edgelist" => Some(GraphFormat::EdgeList),
            _ => None,
        }
    }
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "dimacs" | "col" => Ok(GraphFormat::Dimacs),
            "edgelist" | "edges" => Ok(GraphFormat::EdgeList),
            other => Err(format!("unknown graph format '{other}'")),
        }
    }
}

/// Errors from parsing or serializing graph files.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("malformed input at byte {position}: {reason}")]
    MalformedInput { position: usize, reason: String },
    #[error("unsupported header: {0}")]
    UnsupportedHeader(String),
    #[error("graph on {0} vertices is too large for graph6")]
    GraphTooLarge(usize),
}

fn malformed(position: usize, reason: impl Into<String>) -> FormatError {
    FormatError::MalformedInput {
        position,
        reason: reason.into(),
    }
}

/// Largest vertex count representable in graph6 (2^36 - 1).
pub const GRAPH6_MAX_N: u64 = 68_719_476_735;

/// Parses one graph in the given format.
pub fn parse_graph(text: &[u8], format: GraphFormat) -> Result<Graph, FormatError> {
    match format {
        GraphFormat::Graph6 => parse_graph6(text),
        GraphFormat::Dimacs => parse_dimacs(text),
        GraphFormat::EdgeList => parse_edgelist(text),
    }
}

/// Serializes a graph canonically in the given format.
pub fn serialize_graph(g: &Graph, format: GraphFormat) -> Result<String, FormatError> {
    match format {
        GraphFormat::Graph6 => serialize_graph6(g),
        GraphFormat::Dimacs => Ok(serialize_dimacs(g)),
        GraphFormat::EdgeList => Ok(serialize_edgelist(g)),
    }
}

fn parse_graph6(text: &[u8]) -> Result<Graph, FormatError> {
    let mut start = 0;
    let mut end = text.len();
    while start < end && text[start].is_ascii_whitespace() {
        start += 1;
    }
    while end > start && text[end - 1].is_ascii_whitespace() {
        end -= 1;
    }
    let mut off = start;
    let mut s = &text[start..end];
    if let Some(rest) = s.strip_prefix(b">>graph6<<".as_slice()) {
        off += s.len() - rest.len();
        s = rest;
    }
    if s.is_empty() {
        return Err(malformed(off, "empty graph6 value"));
    }
    match s[0] {
        b':' | b';' => return Err(FormatError::UnsupportedHeader("sparse6".into())),
        b'&' => return Err(FormatError::UnsupportedHeader("digraph6".into())),
        _ => {}
    }
    let (n, consumed) = parse_graph6_size(s, off)?;
    let data = &s[consumed..];
    let nbits = (n as u128) * (n.saturating_sub(1) as u128) / 2;
    let nbytes = nbits.div_ceil(6);
    if data.len() as u128 != nbytes {
        return Err(malformed(
            off + consumed,
            format!("expected {nbytes} adjacency bytes, found {}", data.len()),
        ));
    }
    let n = n as usize;
    let mut pairs = Vec::new();
    let mut u = 0usize;
    let mut v = 1usize;
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(malformed(off + consumed + i, "adjacency byte out of range"));
        }
        let bits = b - 63;
        for shift in (0..6).rev() {
            if v >= n {
                break;
            }
            if (bits >> shift) & 1 == 1 {
                pairs.push((u, v));
            }
            u += 1;
            if u == v {
                u = 0;
                v += 1;
            }
        }
    }
    Ok(Graph::build(n, &pairs).expect("graph6 bits yield valid edges"))
}

fn parse_graph6_size(s: &[u8], off: usize) -> Result<(u64, usize), FormatError> {
    if s[0] != 126 {
        let b = s[0];
        if !(63..=125).contains(&b) {
            return Err(malformed(off, "size byte out of range"));
        }
        return Ok((u64::from(b - 63), 1));
    }
    let (groups, skip) = if s.len() >= 2 && s[1] == 126 {
        (6, 2)
    } else {
        (3, 1)
    };
    if s.len() < skip + groups {
        return Err(malformed(off, "truncated size field"));
    }
    let mut n = 0u64;
    for i in 0..groups {
        let b = s[skip + i];
        if !(63..=126).contains(&b) {
            return Err(malformed(off + skip + i, "size byte out of range"));
        }
        n = (n << 6) | u64::from(b - 63);
    }
    Ok((n, skip + groups))
}

fn serialize_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    } else if n as u64 <= GRAPH6_MAX_N {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    } else {
        return Err(FormatError::GraphTooLarge(n));
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            nbits += 1;
            if nbits == 6 {
                out.push(63 + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        acc <<= 6 - nbits;
        out.push(63 + acc);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

fn as_utf8(text: &[u8]) -> Result<&str, FormatError> {
    std::str::from_utf8(text).map_err(|e| malformed(e.valid_up_to(), "input is not valid UTF-8"))
}

fn parse_token(tok: Option<&str>, position: usize, what: &str) -> Result<usize, FormatError> {
    let t = tok.ok_or_else(|| malformed(position, format!("missing {what}")))?;
    t.parse()
        .map_err(|_| malformed(position, format!("invalid {what} '{t}'")))
}

fn parse_dimacs(text: &[u8]) -> Result<Graph, FormatError> {
    let s = as_utf8(text)?;
    let mut header: Option<(usize, usize)> = None;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut pos = 0usize;
    for raw in s.split('\n') {
        let line_start = pos;
        pos += raw.len() + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut tok = line.split_whitespace();
        match tok.next().unwrap() {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(malformed(line_start, "duplicate problem line"));
                }
                let kind = tok
                    .next()
                    .ok_or_else(|| malformed(line_start, "problem line missing type"))?;
                if kind != "edge" {
                    return Err(FormatError::UnsupportedHeader(format!(
                        "dimacs problem type '{kind}'"
                    )));
                }
                let n = parse_token(tok.next(), line_start, "vertex count")?;
                let m = parse_token(tok.next(), line_start, "edge count")?;
                if tok.next().is_some() {
                    return Err(malformed(line_start, "trailing tokens on problem line"));
                }
                header = Some((n, m));
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(malformed(line_start, "edge line before problem line"));
                };
                let u = parse_token(tok.next(), line_start, "vertex id")?;
                let v = parse_token(tok.next(), line_start, "vertex id")?;
                if tok.next().is_some() {
                    return Err(malformed(line_start, "trailing tokens on edge line"));
                }
                for w in [u, v] {
                    if w < 1 || w > n {
                        return Err(malformed(line_start, format!("vertex {w} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(malformed(line_start, format!("loop edge at vertex {u}")));
                }
                pairs.push((u - 1, v - 1));
            }
            other => {
                return Err(malformed(
                    line_start,
                    format!("unrecognized line '{other}'"),
                ));
            }
        }
    }
    let Some((n, m)) = header else {
        return Err(malformed(0, "missing problem line"));
    };
    if pairs.len() != m {
        return Err(malformed(
            text.len(),
            format!("problem line declares {m} edges, found {}", pairs.len()),
        ));
    }
    Ok(Graph::build(n, &pairs).expect("dimacs edges validated"))
}

fn serialize_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("e {} {}\n", e.u() + 1, e.v() + 1));
    }
    out
}

fn parse_edgelist(text: &[u8]) -> Result<Graph, FormatError> {
    let s = as_utf8(text)?;
    let mut declared_n: Option<usize> = None;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut max_id: Option<usize> = None;
    let mut first_significant = true;
    let mut pos = 0usize;
    for raw in s.split('\n') {
        let line_start = pos;
        pos += raw.len() + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tok = line.split_whitespace();
        let first = tok.next().unwrap();
        if first_significant && first == "n" {
            let n = parse_token(tok.next(), line_start, "vertex count")?;
            if tok.next().is_some() {
                return Err(malformed(line_start, "trailing tokens on n line"));
            }
            declared_n = Some(n);
            first_significant = false;
            continue;
        }
        first_significant = false;
        let u: usize = first
            .parse()
            .map_err(|_| malformed(line_start, format!("invalid vertex id '{first}'")))?;
        let v = parse_token(tok.next(), line_start, "vertex id")?;
        if tok.next().is_some() {
            return Err(malformed(line_start, "trailing tokens on edge line"));
        }
        if u == v {
            return Err(malformed(line_start, format!("loop edge at vertex {u}")));
        }
        if let Some(n) = declared_n {
            for w in [u, v] {
                if w >= n {
                    return Err(malformed(line_start, format!("vertex {w} outside 0..{n}")));
                }
            }
        }
        max_id = Some(max_id.map_or(u.max(v), |m: usize| m.max(u).max(v)));
        pairs.push((u, v));
    }
    let n = declared_n.unwrap_or(max_id.map_or(0, |m| m + 1));
    Ok(Graph::build(n, &pairs).expect("edgelist edges validated"))
}

fn serialize_edgelist(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    fn cycle(n: usize) -> Graph {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::build(n, &pairs).unwrap()
    }

    #[test]
    fn graph6_c5_is_dhc() {
        // header 'D' = 68 for n = 5, then bits 101001 100100 -> "hc"
        let s = serialize_graph(&cycle(5), GraphFormat::Graph6).unwrap();
        assert_eq!(s, "Dhc");
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn graph6_parse_k5() {
        // "D~{" has all ten upper-triangle bits set
        let g = parse_graph(b"D~{", GraphFormat::Graph6).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 10);
    }

    #[test]
    fn graph6_known_encoding() {
        // 5 vertices, edges 0-2 0-4 1-3 3-4 encode to "DQc"
        let g = Graph::build(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(serialize_graph(&g, GraphFormat::Graph6).unwrap(), "DQc");
    }

    #[test]
    fn graph6_empty_graph() {
        let g = Graph::build(0, &[]).unwrap();
        assert_eq!(serialize_graph(&g, GraphFormat::Graph6).unwrap(), "?");
        assert_eq!(parse_graph(b"?", GraphFormat::Graph6).unwrap().n(), 0);
    }

    #[test]
    fn graph6_prefix_and_whitespace() {
        let g = parse_graph(b">>graph6<<Dhc\n", GraphFormat::Graph6).unwrap();
        assert_eq!(g, cycle(5));
    }

    #[test]
    fn graph6_long_size_round_trip() {
        let g = Graph::build(100, &[(0, 99), (50, 51)]).unwrap();
        let s = serialize_graph(&g, GraphFormat::Graph6).unwrap();
        assert_eq!(s.as_bytes()[0], 126);
        let back = parse_graph(s.as_bytes(), GraphFormat::Graph6).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn graph6_rejects_sparse6() {
        assert!(matches!(
            parse_graph(b":Fa@x^", GraphFormat::Graph6),
            Err(FormatError::UnsupportedHeader(_))
        ));
    }

    #[test]
    fn graph6_rejects_truncation() {
        assert!(matches!(
            parse_graph(b"Dh", GraphFormat::Graph6),
            Err(FormatError::MalformedInput { .. })
        ));
    }

    #[test]
    fn dimacs_p3_round_trip() {
        let text = b"p edge 3 2\ne 1 2\ne 2 3\n";
        let g = parse_graph(text, GraphFormat::Dimacs).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), &[Edge::new(0, 1), Edge::new(1, 2)]);
        assert_eq!(
            serialize_graph(&g, GraphFormat::Dimacs).unwrap().as_bytes(),
            text
        );
    }

    #[test]
    fn dimacs_comments_ignored() {
        let g = parse_graph(
            b"c path on three vertices\np edge 3 2\nc mid\ne 1 2\ne 2 3\n",
            GraphFormat::Dimacs,
        )
        .unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn dimacs_rejects_wrong_problem_type() {
        assert!(matches!(
            parse_graph(b"p sat 3 2\n", GraphFormat::Dimacs),
            Err(FormatError::UnsupportedHeader(_))
        ));
    }

    #[test]
    fn dimacs_rejects_count_mismatch() {
        assert!(matches!(
            parse_graph(b"p edge 3 2\ne 1 2\n", GraphFormat::Dimacs),
            Err(FormatError::MalformedInput { .. })
        ));
    }

    #[test]
    fn dimacs_rejects_out_of_range() {
        let err = parse_graph(b"p edge 3 1\ne 1 4\n", GraphFormat::Dimacs);
        assert!(matches!(err, Err(FormatError::MalformedInput { .. })));
    }

    #[test]
    fn edgelist_p3() {
        let g = parse_graph(b"0 1\n1 2\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), &[Edge::new(0, 1), Edge::new(1, 2)]);
    }

    #[test]
    fn edgelist_n_line_and_comments() {
        let g = parse_graph(
            b"# padded graph\nn 6\n0 1 # first\n\n1 2\n",
            GraphFormat::EdgeList,
        )
        .unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn edgelist_round_trip_keeps_isolated_vertices() {
        let g = Graph::build(7, &[(0, 1), (5, 6)]).unwrap();
        let s = serialize_graph(&g, GraphFormat::EdgeList).unwrap();
        assert_eq!(parse_graph(s.as_bytes(), GraphFormat::EdgeList).unwrap(), g);
    }

    #[test]
    fn edgelist_rejects_loop() {
        assert!(matches!(
            parse_graph(b"2 2\n", GraphFormat::EdgeList),
            Err(FormatError::MalformedInput { .. })
        ));
    }
}
