//! graph6 records: reading, writing and line streams.
//!
//! The vertex count uses the one-byte header for `n <= 62` and the four-byte
//! form (`~` followed by 18 bits) up to [`GRAPH6_MAX_N`]. Edge bits are the
//! upper triangle in column order `x(0,1) x(0,2) x(1,2) x(0,3) ...`, packed
//! six to a byte, each byte offset by 63, final byte zero-padded.

use crate::error::GraphError;
use crate::graph::Graph;

pub const GRAPH6_MAX_N: usize = 258_047;

const BIAS: u8 = 63;

/// Parses one graph6 record (surrounding whitespace and an optional
/// `>>graph6<<` prefix are ignored).
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let trimmed = text.trim();
    let lead = text.len() - text.trim_start().len();
    let (bytes, base) = match trimmed.strip_prefix(">>graph6<<") {
        Some(rest) => (rest.as_bytes(), lead + 10),
        None => (trimmed.as_bytes(), lead),
    };
    let err = |offset: usize, message: String| GraphError::Graph6 {
        offset: base + offset,
        message,
    };

    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(
            pos,
            format!("byte {:#04x} outside 63..=126", bytes[pos]),
        ));
    }
    let (n, header_len) = match bytes {
        [] => return Err(err(0, "empty record".into())),
        [126, 126, ..] => return Err(err(0, "eight-byte size header not supported".into())),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(err(bytes.len(), "truncated four-byte size header".into()));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - BIAS));
            if n < 63 {
                return Err(err(1, format!("non-canonical size header for n = {n}")));
            }
            (n, 4)
        }
        [b, ..] => (usize::from(b - BIAS), 1),
    };

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let payload = &bytes[header_len..];
    if payload.len() < nbytes {
        return Err(err(
            bytes.len(),
            format!(
                "truncated payload: need {nbytes} bytes for n = {n}, found {}",
                payload.len()
            ),
        ));
    }
    if payload.len() > nbytes {
        return Err(err(
            header_len + nbytes,
            format!("{} trailing bytes after payload", payload.len() - nbytes),
        ));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - BIAS;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = payload[nbytes - 1] - BIAS;
        let pad_mask = (1u8 << (6 - nbits % 6)) - 1;
        if last & pad_mask != 0 {
            return Err(err(header_len + nbytes - 1, "non-zero padding bits".into()));
        }
    }
    Graph::new(n, edges)
}

/// Encodes a graph as a graph6 record (no trailing newline).
pub fn to_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(GraphError::Graph6TooLarge {
            n,
            max: GRAPH6_MAX_N,
        });
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut payload = vec![0u8; nbits.div_ceil(6)];
    for &(u, v) in g.edges() {
        // column-major position of x(u, v), u < v
        let k = v * (v - 1) / 2 + u;
        payload[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(payload.into_iter().map(|b| b + BIAS));
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// One record of a graph6 stream: 1-based line number and the parse result.
pub type StreamRecord = (usize, String, Result<Graph, GraphError>);

/// Parses a graph6 stream, one record per non-blank line.
pub fn parse_graph6_stream(text: &str) -> impl Iterator<Item = StreamRecord> + '_ {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| (i + 1, line.trim().to_string(), parse_graph6(line)))
}
