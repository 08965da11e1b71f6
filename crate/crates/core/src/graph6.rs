//! graph6 encoding (McKay's format): a size header followed by the upper
//! triangle of the adjacency matrix, column by column, six bits per
//! printable byte.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order representable with the 4-byte header.
pub const MAX_ORDER: usize = 258_047;

const OFFSET: u8 = 63;
const LONG_HEADER: u8 = 126;
const FILE_HEADER: &str = ">>graph6<<";

fn sextet(pos: usize, byte: u8) -> Result<u8> {
    if (OFFSET..=126).contains(&byte) {
        Ok(byte - OFFSET)
    } else {
        Err(Error::Graph6(format!(
            "invalid byte 0x{byte:02x} at offset {pos}"
        )))
    }
}

/// Decodes one graph. Surrounding whitespace and an optional `>>graph6<<`
/// prefix are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let bytes = text.strip_prefix(FILE_HEADER).unwrap_or(text).as_bytes();
    let first = *bytes
        .first()
        .ok_or_else(|| Error::Graph6("empty input".into()))?;

    let (n, body) = if first == LONG_HEADER {
        if bytes.get(1) == Some(&LONG_HEADER) {
            return Err(Error::Graph6(format!(
                "orders above {MAX_ORDER} (8-byte header) are not supported"
            )));
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated size header".into()));
        }
        let mut n = 0usize;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            n = (n << 6) | sextet(i + 1, b)? as usize;
        }
        (n, &bytes[4..])
    } else {
        (sextet(0, first)? as usize, &bytes[1..])
    };
    let header_len = bytes.len() - body.len();

    if n == 0 {
        return Err(Error::Graph6("order 0 graphs are not supported".into()));
    }
    let bits = n * (n - 1) / 2;
    let needed = bits.div_ceil(6);
    if body.len() < needed {
        return Err(Error::Graph6(format!(
            "truncated bit stream: expected {needed} data bytes, found {}",
            body.len()
        )));
    }
    if body.len() > needed {
        return Err(Error::Graph6(format!(
            "{} trailing bytes after the bit stream",
            body.len() - needed
        )));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            let value = sextet(header_len + k / 6, body[k / 6])?;
            if value & (1 << (5 - k % 6)) != 0 {
                g.add_edge(u, v)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes a graph of order at most [`MAX_ORDER`].
///
/// # Panics
///
/// Panics if the graph has more than [`MAX_ORDER`] vertices.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(
        n <= MAX_ORDER,
        "graph6 encoder supports at most {MAX_ORDER} vertices"
    );
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(LONG_HEADER);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}
