//! graph6 short form (up to 62 vertices).
//!
//! Layout: one byte `n + 63`, then the upper triangle of the adjacency
//! matrix in column-major order `x(0,1), x(0,2), x(1,2), x(0,3), ...`,
//! packed big-endian into 6-bit groups, each group offset by 63.

use thiserror::Error;

use super::{Graph, Vertex};

pub const MAX_GRAPH6_VERTICES: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("malformed graph6 header: {0}")]
    MalformedHeader(String),
    #[error("graph6 body has {found} bytes, expected {expected}")]
    TruncatedBits { expected: usize, found: usize },
    #[error("invalid graph6 byte {byte:#04x} at offset {offset}")]
    InvalidByte { byte: u8, offset: usize },
    #[error("graph6 padding bits are not zero")]
    NonZeroPadding,
}

/// Parses one graph6 record. Edge `k` is the `k`-th set bit of the
/// upper-triangle bit string. Surrounding whitespace is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim().as_bytes();
    let (&first, body) = bytes
        .split_first()
        .ok_or_else(|| Graph6Error::MalformedHeader("empty record".into()))?;
    if first == b'>' {
        return Err(Graph6Error::MalformedHeader("'>>graph6<<' prefix is not supported".into()));
    }
    if !(63..=126).contains(&first) {
        return Err(Graph6Error::InvalidByte { byte: first, offset: 0 });
    }
    if first == 126 {
        return Err(Graph6Error::MalformedHeader(format!(
            "long form (n > {MAX_GRAPH6_VERTICES}) is not supported"
        )));
    }
    let n = usize::from(first - 63);
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::TruncatedBits { expected, found: body.len() });
    }
    let mut groups = Vec::with_capacity(body.len());
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { byte: b, offset: i + 1 });
        }
        groups.push(b - 63);
    }
    let bit = |k: usize| (groups[k / 6] >> (5 - k % 6)) & 1 == 1;
    if (bit_count..expected * 6).any(bit) {
        return Err(Graph6Error::NonZeroPadding);
    }
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::with_vertices(n, edges).expect("upper-triangle pairs are simple"))
}

/// Encodes `g` in graph6 short form.
///
/// # Panics
///
/// If `g` has more than [`MAX_GRAPH6_VERTICES`] vertices.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    assert!(n <= MAX_GRAPH6_VERTICES, "graph6 short form holds at most 62 vertices");
    let bit_count = n * n.saturating_sub(1) / 2;
    let mut bits = vec![false; bit_count.div_ceil(6) * 6];
    for &(u, v) in g.edges() {
        let (i, j) = (u.min(v), u.max(v));
        bits[j * (j - 1) / 2 + i] = true;
    }
    let mut out = String::with_capacity(1 + bits.len() / 6);
    out.push(char::from(n as u8 + 63));
    for chunk in bits.chunks(6) {
        let value = chunk.iter().fold(0u8, |acc, &b| (acc << 1) | u8::from(b));
        out.push(char::from(value + 63));
    }
    out
}
