//! graph6 encoding (header-free). Only the single-byte order prefix is
//! supported since graphs here have at most 16 vertices.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{SmallGraph, MAX_VERTICES};

const BIAS: u8 = 63;

pub fn encode(g: &SmallGraph) -> String {
    let n = g.n();
    let mut out = String::with_capacity(1 + (n * (n - 1) / 2).div_ceil(6));
    out.push((BIAS + n as u8) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((BIAS + acc) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((BIAS + (acc << (6 - filled))) as char);
    }
    out
}

pub fn decode(text: &str) -> Result<SmallGraph> {
    let bytes = text.as_bytes();
    let err = |offset: usize, reason: &str| Error::Graph6 {
        offset,
        reason: reason.to_string(),
    };
    let first = *bytes.first().ok_or_else(|| err(0, "empty input"))?;
    if !(BIAS..=126).contains(&first) {
        return Err(err(0, "byte outside the printable range 63..=126"));
    }
    if first == 126 {
        return Err(err(0, "multi-byte order prefix: more than 62 vertices"));
    }
    let n = (first - BIAS) as usize;
    if n == 0 || n > MAX_VERTICES {
        return Err(err(0, &format!("order {n} outside 1..=16")));
    }
    let pairs = n * (n - 1) / 2;
    let expected = 1 + pairs.div_ceil(6);
    if bytes.len() < expected {
        return Err(err(bytes.len(), "truncated adjacency data"));
    }
    if bytes.len() > expected {
        return Err(err(expected, "trailing bytes after adjacency data"));
    }
    let mut rows = [0u16; MAX_VERTICES];
    let mut bit = 0;
    for (offset, &b) in bytes.iter().enumerate().skip(1) {
        if !(BIAS..=126).contains(&b) {
            return Err(err(offset, "byte outside the printable range 63..=126"));
        }
        let value = b - BIAS;
        for shift in (0..6).rev() {
            let set = value >> shift & 1 == 1;
            if bit >= pairs {
                if set {
                    return Err(err(offset, "nonzero padding bits"));
                }
            } else if set {
                let (i, j) = column_major_pair(bit);
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    SmallGraph::from_rows(&rows[..n])
}

/// The `p`-th pair `(i, j)`, `i < j`, in column-major upper-triangle order.
fn column_major_pair(p: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= p {
        start += j;
        j += 1;
    }
    (p - start, j)
}

/// Reads one graph per line, skipping blank lines. Errors carry the line
/// number in the reason.
pub fn read_stream<R: BufRead>(reader: R) -> Result<Vec<SmallGraph>> {
    let mut graphs = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        let g = decode(line).map_err(|e| match e {
            Error::Graph6 { offset, reason } => Error::Graph6 {
                offset,
                reason: format!("line {}: {reason}", lineno + 1),
            },
            other => other,
        })?;
        graphs.push(g);
    }
    Ok(graphs)
}

pub fn write_stream<W: std::io::Write>(mut writer: W, graphs: &[SmallGraph]) -> Result<()> {
    for g in graphs {
        writeln!(writer, "{}", encode(g))?;
    }
    Ok(())
}
