//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per printable byte.

use std::io::BufRead;

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";
const SHORT_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const LONG_MAX: usize = 68_719_476_735;

/// One line of a graph6 stream, 1-based line number.
#[derive(Debug, Clone)]
pub struct Graph6Line {
    pub line: usize,
    pub result: Result<Graph>,
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    assert!(n <= LONG_MAX, "graph order {n} is beyond the graph6 range");
    if n <= SHORT_MAX {
        out.push(n as u8 + 63);
    } else if n <= MEDIUM_MAX {
        out.push(126);
        push_groups(n, 3, out);
    } else {
        out.extend([126, 126]);
        push_groups(n, 6, out);
    }
}

fn push_groups(n: usize, groups: usize, out: &mut Vec<u8>) {
    for k in (0..groups).rev() {
        out.push(((n >> (6 * k)) & 0x3f) as u8 + 63);
    }
}

pub fn decode_graph6(text: &str) -> Result<Graph> {
    let mut bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let mut base = 0;
    if bytes.starts_with(HEADER.as_bytes()) {
        bytes = &bytes[HEADER.len()..];
        base = HEADER.len();
    }
    let err = |offset: usize, message: &str| Error::Parse { offset: base + offset, message: message.to_string() };
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i, &format!("byte 0x{b:02x} outside the printable graph6 range")));
        }
    }
    let (n, header_len) = match bytes {
        [] => return Err(err(0, "empty input")),
        [126, 126, rest @ ..] => (read_groups(rest, 6).ok_or_else(|| err(2, "truncated size field"))?, 8),
        [126, rest @ ..] => (read_groups(rest, 3).ok_or_else(|| err(1, "truncated size field"))?, 4),
        [b, ..] => ((b - 63) as usize, 1),
    };
    let body = &bytes[header_len..];
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if body.len() != needed {
        return Err(err(
            header_len + body.len().min(needed),
            &format!("expected {needed} adjacency bytes for order {n}, found {}", body.len()),
        ));
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - 63;
            if byte & (0x20 >> (bit % 6)) != 0 {
                g.set_edge(i, j, true);
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) {
        let last = body[bit / 6] - 63;
        if last & ((1u8 << (6 - bit % 6)) - 1) != 0 {
            return Err(err(header_len + bit / 6, "non-zero padding bits"));
        }
    }
    Ok(g)
}

fn read_groups(bytes: &[u8], groups: usize) -> Option<usize> {
    let digits = bytes.get(..groups)?;
    Some(digits.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
}

/// Decodes every non-blank line; malformed lines are reported, not fatal.
pub fn read_graph6_lines(reader: impl BufRead) -> Vec<Graph6Line> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(i, line)| match line {
            Ok(text) if text.trim().is_empty() => None,
            Ok(text) => Some(Graph6Line { line: i + 1, result: decode_graph6(text.trim()) }),
            Err(e) => Some(Graph6Line {
                line: i + 1,
                result: Err(Error::Parse { offset: 0, message: e.to_string() }),
            }),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};

    #[test]
    fn encode_k2_bit_exact() {
        // n = 2 -> 'A'; the single upper-triangle bit set -> 100000 + 63 = '_'.
        assert_eq!(encode_graph6(&generate(GraphKind::Complete(2)).unwrap()), "A_");
        assert_eq!(encode_graph6(&Graph::empty(1)), "@");
    }

    #[test]
    fn known_five_vertex_string() {
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&g), "DQc");
        assert_eq!(decode_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn round_trip_cycle() {
        let c7 = generate(GraphKind::Cycle(7)).unwrap();
        assert_eq!(decode_graph6(&encode_graph6(&c7)).unwrap(), c7);
    }

    #[test]
    fn medium_size_header() {
        let g = generate(GraphKind::Path(70)).unwrap();
        let s = encode_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(&s.as_bytes()[1..4], &[63, 64, 63 + 6]);
        assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn header_prefix_accepted() {
        assert_eq!(decode_graph6(">>graph6<<A_\n").unwrap().edge_count(), 1);
    }

    #[test]
    fn parse_errors_carry_offsets() {
        match decode_graph6("D Q") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(decode_graph6("DQ"), Err(Error::Parse { .. })));
        assert!(matches!(decode_graph6(""), Err(Error::Parse { offset: 0, .. })));
        // 'A' followed by '`' sets a padding bit
        assert!(matches!(decode_graph6("A`"), Err(Error::Parse { offset: 1, .. })));
    }

    #[test]
    fn stream_reports_bad_lines() {
        let text = "A_\n\nbad line\nBw\n";
        let lines = read_graph6_lines(text.as_bytes());
        assert_eq!(lines.len(), 3);
        assert!(lines[0].result.is_ok());
        assert_eq!(lines[1].line, 3);
        assert!(lines[1].result.is_err());
        assert_eq!(lines[2].result.as_ref().unwrap().edge_count(), 3);
    }
}
