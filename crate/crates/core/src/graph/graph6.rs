//! graph6 and plain edge-list text formats.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) into 6-bit groups offset by 63.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

/// Decodes a single graph6 string. A leading `>>graph6<<` header and
/// trailing whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let base = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = text.as_bytes()[base..].trim_ascii_end();
    let mut pos = 0usize;

    let mut take = |count: usize, what: &str| -> Result<Vec<u8>> {
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            let Some(&b) = bytes.get(pos) else {
                return Err(parse_err(base + pos, format!("truncated {what}")));
            };
            if !(63..=126).contains(&b) {
                return Err(parse_err(base + pos, format!("byte {b:#04x} outside graph6 range")));
            }
            out.push(b - 63);
            pos += 1;
        }
        Ok(out)
    };

    let first = take(1, "size header")?[0];
    let n = if first < 63 {
        first as usize
    } else {
        let second = take(1, "size header")?[0];
        let digits = if second < 63 {
            let mut d = vec![second];
            d.extend(take(2, "size header")?);
            d
        } else {
            take(6, "size header")?
        };
        digits.iter().fold(0usize, |acc, &d| (acc << 6) | d as usize)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let groups = take(bits.div_ceil(6), "adjacency bits")?;
    if pos != bytes.len() {
        return Err(parse_err(base + pos, "trailing data after graph6 string"));
    }

    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            if groups[k / 6] >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Encodes `g` as graph6 (no header, no newline).
pub fn write_graph6(g: &Graph) -> String {
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
    let bits = n * n.saturating_sub(1) / 2;
    let mut groups = vec![0u8; bits.div_ceil(6)];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                groups[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    out.extend(groups.into_iter().map(|b| b + 63));
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

/// Parses one `u v` pair per line. Blank lines and `#` comments are skipped;
/// a line holding a single integer declares the vertex count.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared = None;
    let mut edges = Vec::new();
    let mut offset = 0usize;
    for line in text.split_inclusive('\n') {
        let body = line.split('#').next().unwrap_or("").trim();
        let fields: Vec<&str> = body.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| parse_err(offset, format!("not a vertex index: {s:?}")))
        };
        match fields.as_slice() {
            [] => {}
            [n] if declared.is_none() && edges.is_empty() => declared = Some(num(n)?),
            [u, v] => edges.push((num(u)?, num(v)?)),
            _ => return Err(parse_err(offset, format!("expected `u v`, got {body:?}"))),
        }
        offset += line.len();
    }
    let needed = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = match declared {
        Some(n) if n < needed => {
            return Err(parse_err(0, format!("declared n = {n} but an edge uses vertex {}", needed - 1)))
        }
        Some(n) => n,
        None => needed,
    };
    Graph::from_edges(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.n());
    for &(u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// graph6 if the text is a single token, edge list otherwise.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    if !trimmed.is_empty() && !trimmed.contains(char::is_whitespace) && !trimmed.chars().all(|c| c.is_ascii_digit()) {
        parse_graph6(trimmed)
    } else {
        parse_edge_list(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, random_tree};
    use proptest::prelude::*;

    #[test]
    fn star_roundtrip() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), &[(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(write_graph6(&g), "D?{");
    }

    #[test]
    fn k4_matches_reference_encoding() {
        // K_4: 'C' = 4 + 63, all six bits set -> '~'
        let g = parse_graph6("C~").unwrap();
        assert_eq!((g.n(), g.m()), (4, 6));
        assert_eq!(write_graph6(&complete(4).unwrap()), "C~");
    }

    #[test]
    fn truncated_and_malformed() {
        match parse_graph6("E") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(parse_graph6(""), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse_graph6("D?\u{7f}"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_graph6("D?{?"), Err(Error::Parse { offset: 3, .. })));
        assert!(parse_graph6(">>graph6<<D?{\n").is_ok());
    }

    #[test]
    fn large_header() {
        let g = cycle(100).unwrap();
        let s = write_graph6(&g);
        assert_eq!(&s.as_bytes()[..1], &[126]);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn edge_list_formats() {
        let g = parse_edge_list("# triangle\n3\n0 1\n1 2\n2 0\n").unwrap();
        assert_eq!(g, cycle(3).unwrap());
        let h = parse_edge_list(&write_edge_list(&random_tree(12, 3).unwrap())).unwrap();
        assert_eq!(h, random_tree(12, 3).unwrap());
        assert!(parse_edge_list("0 1 2\n").is_err());
        assert_eq!(parse_graph_text("D?{").unwrap().m(), 4);
        assert_eq!(parse_graph_text("0 1\n").unwrap().m(), 1);
    }

    proptest! {
        #[test]
        fn graph6_roundtrip(n in 0usize..=62, bits in proptest::collection::vec(any::<bool>(), 62 * 61 / 2)) {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] { edges.push((i, j)); }
                    k += 1;
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let s = write_graph6(&g);
            prop_assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }
}
