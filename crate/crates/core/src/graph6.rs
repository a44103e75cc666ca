//! graph6 encoding: `N(n)` header, then the upper triangle of the adjacency
//! matrix in column order (`(0,1), (0,2), (1,2), (0,3), ...`), six bits per
//! printable byte (value + 63), big-endian, zero padded.

use std::io::{self, Write};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &[u8] = b">>graph6<<";
const MAX_N: u64 = (1 << 36) - 1;

fn write_size<W: Write>(n: u64, out: &mut W) -> io::Result<()> {
    if n <= 62 {
        out.write_all(&[n as u8 + 63])
    } else if n <= 258_047 {
        out.write_all(&[126, ((n >> 12) & 63) as u8 + 63, ((n >> 6) & 63) as u8 + 63, (n & 63) as u8 + 63])
    } else {
        let mut buf = [126u8, 126, 0, 0, 0, 0, 0, 0];
        for (i, b) in buf[2..].iter_mut().enumerate() {
            *b = ((n >> (6 * (5 - i))) & 63) as u8 + 63;
        }
        out.write_all(&buf)
    }
}

/// Streams the graph6 line (without newline) for a graph given by a
/// neighbor oracle. `earlier_neighbors(j)` must return the neighbors of `j`
/// that are smaller than `j`, in any order.
pub fn write_with<W, F>(n: usize, mut earlier_neighbors: F, out: &mut W) -> io::Result<()>
where
    W: Write,
    F: FnMut(usize) -> Vec<usize>,
{
    assert!(n as u64 <= MAX_N, "graph6 supports n < 2^36");
    write_size(n as u64, out)?;
    let mut buf = Vec::with_capacity(4096);
    let (mut acc, mut nbits) = (0u8, 0u8);
    let mut column = vec![false; n];
    for j in 1..n {
        let nbrs = earlier_neighbors(j);
        for &i in &nbrs {
            column[i] = true;
        }
        for flag in column.iter_mut().take(j) {
            acc = (acc << 1) | *flag as u8;
            *flag = false;
            nbits += 1;
            if nbits == 6 {
                buf.push(acc + 63);
                acc = 0;
                nbits = 0;
                if buf.len() >= 4096 {
                    out.write_all(&buf)?;
                    buf.clear();
                }
            }
        }
    }
    if nbits > 0 {
        buf.push((acc << (6 - nbits)) + 63);
    }
    out.write_all(&buf)
}

pub fn write_graph6<W: Write>(g: &Graph, out: &mut W) -> io::Result<()> {
    write_with(g.n(), |j| g.neighbors(j).iter().take_while(|&i| i < j).collect(), out)
}

/// graph6 bytes for `g`, no trailing newline. Labels are not serialized.
pub fn to_graph6(g: &Graph) -> Vec<u8> {
    let mut out = Vec::new();
    write_graph6(g, &mut out).expect("writing to a Vec cannot fail");
    out
}

pub fn to_graph6_string(g: &Graph) -> String {
    String::from_utf8(to_graph6(g)).expect("graph6 is ASCII")
}

fn read_size(s: &[u8]) -> Result<(usize, &[u8])> {
    let val = |b: u8| -> Result<u64> {
        if (63..=126).contains(&b) {
            Ok((b - 63) as u64)
        } else {
            Err(Error::Graph6(format!("invalid byte 0x{b:02x} in size header")))
        }
    };
    let take = |s: &[u8], len: usize| -> Result<u64> {
        s.get(..len)
            .ok_or_else(|| Error::Graph6("truncated size header".into()))?
            .iter()
            .try_fold(0u64, |acc, &b| Ok((acc << 6) | val(b)?))
    };
    match s {
        [] => Err(Error::Graph6("empty input".into())),
        [126, 126, rest @ ..] => {
            let n = take(rest, 6)?;
            if n <= 258_047 {
                return Err(Error::Graph6("non-canonical 8-byte size header".into()));
            }
            Ok((n as usize, &rest[6..]))
        }
        [126, rest @ ..] => {
            let n = take(rest, 3)?;
            if n <= 62 {
                return Err(Error::Graph6("non-canonical 4-byte size header".into()));
            }
            Ok((n as usize, &rest[3..]))
        }
        [b, rest @ ..] => Ok((val(*b)? as usize, rest)),
    }
}

/// Parses one graph6 line. An optional `>>graph6<<` prefix and trailing
/// line break are accepted.
pub fn from_graph6(s: &[u8]) -> Result<Graph> {
    let mut s = s.strip_prefix(HEADER).unwrap_or(s);
    while let [rest @ .., b'\n' | b'\r'] = s {
        s = rest;
    }
    let (n, body) = read_size(s)?;
    let bits = n as u128 * n.saturating_sub(1) as u128 / 2;
    let expected = bits.div_ceil(6);
    if body.len() as u128 != expected {
        return Err(Error::Graph6(format!(
            "length mismatch: n = {n} needs {expected} data bytes, found {}",
            body.len()
        )));
    }
    if let Some(b) = body.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Error::Graph6(format!("invalid data byte 0x{b:02x}")));
    }
    let pad = (expected * 6 - bits) as u32;
    if pad > 0 {
        let last = body[body.len() - 1] - 63;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    let mut rows = vec![BitSet::new(n); n];
    let mut pos = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[pos / 6] - 63;
            if byte & (1 << (5 - pos % 6)) != 0 {
                rows[i].insert(j);
                rows[j].insert(i);
            }
            pos += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(rows, None))
}

/// Parses every non-empty line.
pub fn read_all(text: &[u8]) -> Result<Vec<Graph>> {
    text.split(|&b| b == b'\n')
        .filter(|line| !line.iter().all(u8::is_ascii_whitespace))
        .map(from_graph6)
        .collect()
}
