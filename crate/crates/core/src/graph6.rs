//! graph6 encoding and decoding (McKay's format) plus DOT emission.
//!
//! The byte layout is the standard one: the order in N(n) form (one byte
//! `n + 63` for n <= 62, `126` followed by three 6-bit groups up to 258047,
//! `126 126` followed by six groups beyond that), then the upper triangle of
//! the adjacency matrix read column by column, packed big-endian into 6-bit
//! groups, each group offset by 63.

use crate::graph::{Graph, GraphError};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("invalid graph6 byte {0:#04x}")]
    InvalidByte(u8),
    #[error("truncated graph6 string: expected {expected} data bytes, got {got}")]
    Truncated { expected: usize, got: usize },
    #[error("trailing bytes after graph6 data")]
    TrailingBytes,
    #[error("graph6 order {0} exceeds the supported range")]
    OrderTooLarge(u64),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const OFFSET: u8 = 63;
const EXTENDED: u8 = 126;
const MAX_ORDER: u64 = 68_719_476_735; // 2^36 - 1, the format's ceiling

fn data_len(order: usize) -> usize {
    let bits = order * order.saturating_sub(1) / 2;
    bits.div_ceil(6)
}

/// Encodes a graph as a graph6 string.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut bytes = Vec::with_capacity(4 + data_len(n));
    if n <= 62 {
        bytes.push(n as u8 + OFFSET);
    } else if n as u64 <= 258_047 {
        bytes.push(EXTENDED);
        for shift in [12, 6, 0] {
            bytes.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    } else {
        bytes.push(EXTENDED);
        bytes.push(EXTENDED);
        for shift in [30, 24, 18, 12, 6, 0] {
            bytes.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }

    let mut group = 0u8;
    let mut filled = 0u8;
    for col in 1..n {
        for row in 0..col {
            group <<= 1;
            if g.has_edge(row, col) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                bytes.push(group + OFFSET);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((group << (6 - filled)) + OFFSET);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

/// Decodes a graph6 string.
pub fn from_graph6(s: &str) -> Result<Graph, Graph6Error> {
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let (order, pos): (u64, usize) = if bytes[0] != EXTENDED {
        (u64::from(check_byte(bytes[0])?), 1)
    } else if bytes.len() > 1 && bytes[1] != EXTENDED {
        (read_groups(bytes, 1, 3)?, 4)
    } else {
        (read_groups(bytes, 2, 6)?, 8)
    };
    if order > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge(order));
    }
    let n = usize::try_from(order).map_err(|_| Graph6Error::OrderTooLarge(order))?;

    let expected = data_len(n);
    let data = &bytes[pos..];
    if data.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            got: data.len(),
        });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingBytes);
    }

    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    for col in 1..n {
        for row in 0..col {
            let byte = check_byte(data[bit_index / 6])?;
            if byte >> (5 - bit_index % 6) & 1 == 1 {
                edges.push((row, col));
            }
            bit_index += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

fn check_byte(b: u8) -> Result<u8, Graph6Error> {
    if (OFFSET..=EXTENDED).contains(&b) {
        Ok(b - OFFSET)
    } else {
        Err(Graph6Error::InvalidByte(b))
    }
}

fn read_groups(bytes: &[u8], start: usize, count: usize) -> Result<u64, Graph6Error> {
    if bytes.len() < start + count {
        return Err(Graph6Error::Truncated {
            expected: start + count,
            got: bytes.len(),
        });
    }
    let mut value = 0u64;
    for &b in &bytes[start..start + count] {
        value = value << 6 | u64::from(check_byte(b)?);
    }
    Ok(value)
}

/// Emits an (uncolored) graph in DOT format.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_is_the_documented_example() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(to_graph6(&g), "A_");
    }

    #[test]
    fn five_vertex_documented_example() {
        // Worked example from the format description: edges 0-2, 0-4, 1-3,
        // 3-4 encode to "DQc".
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        let s = to_graph6(&g);
        assert_eq!(s, "DQc");
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn long_form_header_beyond_62_vertices() {
        let edges: Vec<(usize, usize)> = (0..100).map(|i| (i, (i + 1) % 100)).collect();
        let g = Graph::from_edges(100, &edges).unwrap();
        let s = to_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 100 % 64 + 63]);
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(from_graph6(""), Err(Graph6Error::Empty));
        assert!(matches!(
            from_graph6("D"),
            Err(Graph6Error::Truncated { .. })
        ));
        assert_eq!(from_graph6("A_~"), Err(Graph6Error::TrailingBytes));
        assert_eq!(from_graph6("A\x20"), Err(Graph6Error::InvalidByte(0x20)));
    }

    #[test]
    fn dot_lists_every_edge() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let dot = to_dot(&g);
        assert!(dot.contains("0 -- 1;"));
        assert!(dot.contains("1 -- 2;"));
        assert_eq!(dot.matches("--").count(), 2);
    }
}
