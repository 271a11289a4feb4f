//! graph6 text encoding for small undirected graphs.
//!
//! Only the single-byte header form (n <= 62) is supported: one byte `n + 63`,
//! then the upper triangle in column-major order, packed big-endian six bits
//! per byte with each byte offset by 63. The parser is strict: exact length,
//! bytes in `63..=126`, zero padding bits.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn bad(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decodes a graph6 string.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(bad(0, "empty input"));
    }
    let header = bytes[0];
    if header < 63 {
        return Err(bad(0, format!("byte {header} below graph6 range")));
    }
    if header == 126 {
        return Err(bad(0, "multi-byte vertex counts (n > 62) not supported"));
    }
    let n = (header - 63) as usize;
    let nbits = n * (n - 1) / 2;
    let expect = 1 + nbits.div_ceil(6);
    if bytes.len() < expect {
        return Err(bad(
            bytes.len(),
            format!("truncated: need {expect} bytes for n={n}, got {}", bytes.len()),
        ));
    }
    if bytes.len() > expect {
        return Err(bad(expect, "trailing garbage after graph data"));
    }
    for (i, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(bad(i, format!("byte {b} outside graph6 range 63..=126")));
        }
    }
    let mut g = Graph::empty(n);
    let mut pos = 0usize; // bit index into the triangle stream
    for col in 1..n {
        for row in 0..col {
            let byte = bytes[1 + pos / 6] - 63;
            if byte >> (5 - pos % 6) & 1 == 1 {
                g.add_edge(row, col)?;
            }
            pos += 1;
        }
    }
    // remaining padding bits must be zero for a canonical encoding
    while pos < (expect - 1) * 6 {
        let byte = bytes[1 + pos / 6] - 63;
        if byte >> (5 - pos % 6) & 1 == 1 {
            return Err(bad(1 + pos / 6, "nonzero padding bits"));
        }
        pos += 1;
    }
    Ok(g)
}

/// Encodes a graph in graph6 form. Inverse of [`parse_graph6`].
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= 62, "graph6 single-byte header requires n <= 62");
    let mut out = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut filled = 0u8;
    for col in 1..n {
        for row in 0..col {
            acc = (acc << 1) | u8::from(g.has_edge(row, col));
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
    String::from_utf8(out).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};

    #[test]
    fn smallest_graphs() {
        let k1 = parse_graph6("@").unwrap();
        assert_eq!(k1.n(), 1);
        assert_eq!(k1.edge_count(), 0);
        assert_eq!(encode_graph6(&k1), "@");

        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(k4, complete(4).unwrap());
        assert_eq!(encode_graph6(&complete(4).unwrap()), "C~");
    }

    #[test]
    fn four_cycle_encoding() {
        // Derived by hand from the bit layout: columns (0,1),(0,2),(1,2),
        // (0,3),(1,3),(2,3) give bits 101101 = 45, i.e. byte 'l'.
        let c4 = cycle(4).unwrap();
        assert_eq!(encode_graph6(&c4), "Cl");
        assert_eq!(parse_graph6("Cl").unwrap(), c4);
    }

    #[test]
    fn rejects_malformed() {
        // byte below range
        let err = parse_graph6(">").unwrap_err();
        assert!(matches!(err, Error::Graph6 { offset: 0, .. }));
        // truncated: n=4 needs one data byte
        assert!(parse_graph6("C").is_err());
        // trailing garbage
        let err = parse_graph6("Cl@").unwrap_err();
        assert!(matches!(err, Error::Graph6 { offset: 2, .. }));
        // data byte out of range (0x7f)
        assert!(parse_graph6("C\u{7f}").is_err());
        // n=2 has one triangle bit; '_' = 100000 sets exactly that bit
        assert_eq!(parse_graph6("A_").unwrap(), complete(2).unwrap());
        // 'A'-63 = 000010 leaves the edge bit clear but sets a padding bit
        let err = parse_graph6("AA").unwrap_err();
        assert!(matches!(err, Error::Graph6 { .. }));
        // empty
        assert!(parse_graph6("").is_err());
        // big-n header refused
        assert!(parse_graph6("~??").is_err());
    }

    #[test]
    fn newline_tolerated() {
        assert_eq!(parse_graph6("C~\n").unwrap(), complete(4).unwrap());
    }
}
