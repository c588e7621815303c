//! digraph6 and edge-list text formats.

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Largest order representable with the single-byte order field.
pub const DIGRAPH6_MAX_ORDER: usize = 62;

const PREFIX: &str = ">>digraph6<<";

/// `&`, the order byte `n + 63`, then the `n * n` row-major adjacency bits
/// in 6-bit groups, most significant first, each offset by 63.
pub fn encode_digraph6(d: &Digraph) -> Result<String> {
    let n = d.order();
    if n > DIGRAPH6_MAX_ORDER {
        return Err(Error::OrderTooLarge {
            n,
            max: DIGRAPH6_MAX_ORDER,
        });
    }
    let mut out = String::with_capacity(2 + (n * n).div_ceil(6));
    out.push('&');
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for i in 0..n {
        for j in 0..n {
            acc = acc << 1 | d.has_arc(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

pub fn decode_digraph6(text: &str) -> Result<Digraph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(PREFIX).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.first() != Some(&b'&') {
        return Err(Error::MalformedHeader("missing '&'".into()));
    }
    let n = match bytes.get(1) {
        Some(&b) if (63..=63 + DIGRAPH6_MAX_ORDER as u8).contains(&b) => (b - 63) as usize,
        Some(&b) => {
            return Err(Error::MalformedHeader(format!("bad order byte {b:#04x}")));
        }
        None => return Err(Error::MalformedHeader("missing order byte".into())),
    };
    let expected = (n * n).div_ceil(6);
    let payload = &bytes[2..];
    if payload.len() < expected {
        return Err(Error::TruncatedPayload {
            expected,
            got: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(Error::MalformedPayload(format!(
            "{} bytes after the payload",
            payload.len() - expected
        )));
    }
    let mut rows = vec![0u64; n];
    for (k, &b) in payload.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::MalformedPayload(format!("byte {b:#04x} out of range")));
        }
        let group = b - 63;
        for t in 0..6 {
            let idx = k * 6 + t;
            let bit = group >> (5 - t) & 1;
            if idx >= n * n {
                if bit != 0 {
                    return Err(Error::TrailingBitsNonzero);
                }
                continue;
            }
            if bit == 1 {
                let (i, j) = (idx / n, idx % n);
                if i == j {
                    return Err(Error::MalformedPayload(format!("loop at vertex {i}")));
                }
                rows[i] |= 1 << j;
            }
        }
    }
    Digraph::from_out_rows(rows)
}

/// `n m`, then `m` lines `u v`; `#` starts a comment.
pub fn parse_edge_list(text: &str) -> Result<Digraph> {
    let mut nums = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        for tok in body.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| {
                Error::MalformedEdgeList(format!("line {}: bad token {tok:?}", lineno + 1))
            })?;
            nums.push(v);
        }
    }
    let [n, m, rest @ ..] = nums.as_slice() else {
        return Err(Error::MalformedEdgeList("missing 'n m' header".into()));
    };
    if rest.len() != 2 * m {
        return Err(Error::MalformedEdgeList(format!(
            "expected {m} arcs, found {} numbers",
            rest.len()
        )));
    }
    let arcs: Vec<(usize, usize)> = rest.chunks(2).map(|c| (c[0], c[1])).collect();
    Digraph::from_arcs(*n, &arcs)
}

/// Splits input text into digraphs: digraph6 lines, or one edge list when
/// the first meaningful byte is a digit.
pub fn parse_inputs(text: &str) -> Result<Vec<Digraph>> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        None => Ok(Vec::new()),
        Some(l) if l.as_bytes()[0].is_ascii_digit() => Ok(vec![parse_edge_list(text)?]),
        Some(_) => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(decode_digraph6)
            .collect(),
    }
}
