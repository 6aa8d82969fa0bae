//! Text formats: graph6 and a 0-indexed edge list.
//!
//! Edge-list grammar, one record per line:
//!
//! ```text
//! c <free text>        comment, ignored
//! p <n> <m>            header, must come first
//! e <u> <v>            edge, 0-indexed
//! d <s> <t>            terminal pair (only in disjoint-paths instances)
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

const GRAPH6_HEADER: &str = ">>graph6<<";

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Encodes `g` in graph6.
pub fn format_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes a single graph6 string. A leading `>>graph6<<` header and
/// surrounding whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err("empty graph6 string"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(parse_err(format!("byte {b:#04x} outside graph6 range")));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(parse_err("truncated graph6 size prefix"));
        }
        (decode_size(&bytes[1..4]), &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(parse_err("truncated graph6 size prefix"));
        }
        (decode_size(&bytes[2..8]), &bytes[8..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != need {
        return Err(parse_err(format!(
            "graph6 payload for n={n} needs {need} bytes, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut idx = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = body[idx / 6] - 63;
            if byte >> (5 - idx % 6) & 1 == 1 {
                g.insert_edge(u, v);
            }
            idx += 1;
        }
    }
    Ok(g)
}

fn decode_size(chunk: &[u8]) -> usize {
    chunk.iter().fold(0, |acc, &b| (acc << 6) | (b - 63) as usize)
}

/// Writes the edge-list format.
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p {} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

/// A parsed edge-list document: the graph plus any `d` terminal lines.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeListDoc {
    pub graph: Graph,
    pub pairs: Vec<(usize, usize)>,
}

/// Parses the edge-list format, collecting `d` lines as terminal pairs.
pub fn parse_edge_list_doc(text: &str) -> Result<EdgeListDoc> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut pairs = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let tag = fields.next().unwrap();
        let nums: Vec<usize> = fields
            .map(|f| {
                f.parse()
                    .map_err(|_| parse_err(format!("line {}: bad number `{f}`", lineno + 1)))
            })
            .collect::<Result<_>>()?;
        let two = || -> Result<(usize, usize)> {
            match nums[..] {
                [a, b] => Ok((a, b)),
                _ => Err(parse_err(format!("line {}: expected two numbers", lineno + 1))),
            }
        };
        match tag {
            "p" if header.is_none() => header = Some(two()?),
            "p" => return Err(parse_err(format!("line {}: duplicate header", lineno + 1))),
            _ if header.is_none() => {
                return Err(parse_err(format!("line {}: record before `p` header", lineno + 1)))
            }
            "e" => edges.push(two()?),
            "d" => pairs.push(two()?),
            other => {
                return Err(parse_err(format!("line {}: unknown record `{other}`", lineno + 1)))
            }
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err("missing `p <n> <m>` header"))?;
    if edges.len() != m {
        return Err(parse_err(format!(
            "header announces {m} edges, found {}",
            edges.len()
        )));
    }
    let graph = Graph::new(n, &edges)?;
    Ok(EdgeListDoc { graph, pairs })
}

/// Parses the edge-list format; terminal lines are rejected.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let doc = parse_edge_list_doc(text)?;
    if !doc.pairs.is_empty() {
        return Err(parse_err("terminal `d` lines are only valid in path instances"));
    }
    Ok(doc.graph)
}

/// True when `text` looks like the edge-list format rather than graph6.
pub fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("p ") || l.starts_with("c ") || l == "c")
}

/// Reads either format, sniffing the first nonblank line.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    if looks_like_edge_list(text) {
        parse_edge_list(text)
    } else {
        parse_graph6(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cycle, petersen};

    // Expected strings computed with networkx.to_graph6_bytes(header=False).
    #[test]
    fn graph6_known_strings() {
        assert_eq!(format_graph6(&cycle(5)), "Dhc");
        assert_eq!(format_graph6(&Graph::complete(4)), "C~");
        assert_eq!(format_graph6(&petersen()), "IheA@GUAo");
        assert_eq!(format_graph6(&Graph::empty(0)), "?");
        assert_eq!(format_graph6(&Graph::empty(1)), "@");
    }

    #[test]
    fn graph6_long_form() {
        let g = cycle(63);
        let s = format_graph6(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_rejects_malformed() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("Dh").is_err());
        assert!(parse_graph6("Dhcc").is_err());
        assert!(parse_graph6("D h").is_err());
        assert!(parse_graph6("~?").is_err());
    }

    #[test]
    fn graph6_header_and_whitespace() {
        assert_eq!(parse_graph6(">>graph6<<Dhc\n").unwrap(), cycle(5));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = petersen();
        assert_eq!(parse_edge_list(&format_edge_list(&g)).unwrap(), g);
        assert_eq!(parse_graph_text(&format_edge_list(&g)).unwrap(), g);
        assert_eq!(parse_graph_text("IheA@GUAo").unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(parse_edge_list("e 0 1\n").is_err());
        assert!(parse_edge_list("p 2 1\n").is_err());
        assert!(parse_edge_list("p 2 1\ne 0 0\n").is_err());
        assert!(parse_edge_list("p 2 1\ne 0 5\n").is_err());
        assert!(parse_edge_list("p 3 1\ne 0 1\nd 0 2\n").is_err());
        let doc = parse_edge_list_doc("c instance\np 3 1\ne 0 1\nd 0 2\n").unwrap();
        assert_eq!(doc.pairs, vec![(0, 2)]);
    }
}
