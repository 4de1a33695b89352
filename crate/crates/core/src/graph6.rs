//! graph6 encoding: a size prefix followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per byte (big-endian)
//! and offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const LONG_MARK: u8 = 126;
const MAX_ORDER: usize = 258_047;

fn bad(offset: usize, msg: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        msg: msg.into(),
    }
}

pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::invalid(format!("graph6 supports at most {MAX_ORDER} vertices")));
    }
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(LONG_MARK);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 2..=n {
        for i in 1..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            bits += 1;
            if bits == 6 {
                out.push(acc + BIAS);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Parses one graph6 line. An optional `>>graph6<<` prefix and trailing
/// whitespace are accepted; padding bits must be zero.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let prefix = ">>graph6<<";
    let skip = if line.starts_with(prefix) { prefix.len() } else { 0 };
    let bytes = line[skip..].trim_end().as_bytes();
    let at = |i: usize| i + skip;
    let value = |i: usize| -> Result<u8> {
        match bytes.get(i) {
            Some(&b) if (BIAS..=LONG_MARK).contains(&b) => Ok(b - BIAS),
            Some(&b) => Err(bad(at(i), format!("byte {b:#04x} outside 63..=126"))),
            None => Err(bad(at(i), "unexpected end of input")),
        }
    };

    let (n, mut pos) = match bytes.first() {
        None => return Err(bad(at(0), "empty input")),
        Some(&LONG_MARK) => {
            if bytes.get(1) == Some(&LONG_MARK) {
                return Err(bad(at(1), "orders above 258047 are not supported"));
            }
            let n = (1..4).try_fold(0usize, |acc, i| Ok::<_, Error>((acc << 6) | value(i)? as usize))?;
            (n, 4)
        }
        Some(_) => (value(0)? as usize, 1),
    };

    let total_bits = n * n.saturating_sub(1) / 2;
    let data_len = total_bits.div_ceil(6);
    if bytes.len() != pos + data_len {
        return Err(bad(
            at(bytes.len().min(pos + data_len)),
            format!(
                "order {n} needs {data_len} data bytes, found {}",
                bytes.len() - pos
            ),
        ));
    }

    let mut edges = Vec::new();
    let mut bit = 0;
    let mut cur = 0u8;
    for j in 2..=n {
        for i in 1..j {
            if bit % 6 == 0 {
                cur = value(pos)?;
                pos += 1;
            }
            if cur & (1 << (5 - bit % 6)) != 0 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    if bit % 6 != 0 && cur & ((1u8 << (6 - bit % 6)) - 1) != 0 {
        return Err(bad(at(pos - 1), "nonzero padding bits"));
    }
    Graph::new(n, edges)
}
