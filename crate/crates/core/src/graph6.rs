//! graph6 and sparse6 text encodings.
//!
//! Both formats pack bits big-endian into 6-bit groups offset by 63. Graphs
//! with non-contiguous vertex ids are encoded after relabelling to `0..n` in
//! ascending id order.

use thiserror::Error;

use crate::bitset::MAX_VERTICES;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("empty input")]
    Empty,
    #[error("byte {0:#04x} at offset {1} is outside the printable range 63..=126")]
    BadByte(u8, usize),
    #[error("truncated size field")]
    TruncatedSize,
    #[error("graph has {0} vertices; at most {MAX_VERTICES} are supported")]
    TooLarge(u64),
    #[error("expected {expected} data bytes, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("nonzero padding bits")]
    NonzeroPadding,
    #[error("incremental sparse6 (';') is not supported")]
    Incremental,
}

const G6_HEADER: &str = ">>graph6<<";
const S6_HEADER: &str = ">>sparse6<<";

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

fn decode_size(data: &[u8]) -> Result<(u64, &[u8]), FormatError> {
    let &first = data.first().ok_or(FormatError::TruncatedSize)?;
    if first != 126 {
        return Ok(((first - 63) as u64, &data[1..]));
    }
    if data.get(1) == Some(&126) {
        let body = data.get(2..8).ok_or(FormatError::TruncatedSize)?;
        let n = body.iter().fold(0u64, |acc, &b| acc << 6 | (b - 63) as u64);
        return Ok((n, &data[8..]));
    }
    let body = data.get(1..4).ok_or(FormatError::TruncatedSize)?;
    let n = body.iter().fold(0u64, |acc, &b| acc << 6 | (b - 63) as u64);
    Ok((n, &data[4..]))
}

fn check_bytes(data: &[u8], offset: usize) -> Result<(), FormatError> {
    match data.iter().position(|b| !(63..=126).contains(b)) {
        Some(i) => Err(FormatError::BadByte(data[i], offset + i)),
        None => Ok(()),
    }
}

fn pack(bits: &[bool], out: &mut Vec<u8>) {
    for chunk in bits.chunks(6) {
        let mut b = 0u8;
        for i in 0..6 {
            b <<= 1;
            if chunk.get(i).copied().unwrap_or(false) {
                b |= 1;
            }
        }
        out.push(b + 63);
    }
}

fn unpack(data: &[u8]) -> impl Iterator<Item = bool> + '_ {
    data.iter()
        .flat_map(|&b| (0..6).rev().map(move |i| ((b - 63) >> i) & 1 == 1))
}

pub fn to_graph6(g: &Graph) -> String {
    let (h, _) = g.compact();
    let n = h.order();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(h.has_edge(i, j));
        }
    }
    pack(&bits, &mut out);
    String::from_utf8(out).expect("ascii")
}

pub fn from_graph6(line: &str) -> Result<Graph, FormatError> {
    let line = line.strip_prefix(G6_HEADER).unwrap_or(line);
    let data = line.trim_end_matches(['\n', '\r']).as_bytes();
    if data.is_empty() {
        return Err(FormatError::Empty);
    }
    check_bytes(data, 0)?;
    let (n, rest) = decode_size(data)?;
    if n > MAX_VERTICES as u64 {
        return Err(FormatError::TooLarge(n));
    }
    let n = n as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if rest.len() != expected {
        return Err(FormatError::WrongLength {
            expected,
            found: rest.len(),
        });
    }
    let bits: Vec<bool> = unpack(rest).collect();
    if bits[nbits..].iter().any(|&b| b) {
        return Err(FormatError::NonzeroPadding);
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("decoded edges are in range"))
}

fn sparse6_k(n: usize) -> usize {
    let mut k = 1;
    while (1usize << k) < n {
        k += 1;
    }
    k
}

pub fn to_sparse6(g: &Graph) -> String {
    let (h, _) = g.compact();
    let n = h.order();
    let k = sparse6_k(n);
    let mut out = vec![b':'];
    encode_size(n, &mut out);

    let mut bits = Vec::new();
    let push_x = |bits: &mut Vec<bool>, x: usize| {
        for i in (0..k).rev() {
            bits.push((x >> i) & 1 == 1);
        }
    };
    // edges ordered by larger endpoint, then smaller
    let mut edges = h.edges();
    edges.sort_by_key(|&(u, v)| (v, u));
    let mut cur = 0usize;
    for (u, v) in edges {
        if v == cur {
            bits.push(false);
            push_x(&mut bits, u);
        } else if v == cur + 1 {
            cur = v;
            bits.push(true);
            push_x(&mut bits, u);
        } else {
            cur = v;
            bits.push(true);
            push_x(&mut bits, v);
            bits.push(false);
            push_x(&mut bits, u);
        }
    }
    let pad = (6 - bits.len() % 6) % 6;
    if k < 6 && n == (1 << k) && pad >= k && cur + 1 < n {
        bits.push(false);
    }
    let pad = (6 - bits.len() % 6) % 6;
    bits.extend(std::iter::repeat_n(true, pad));
    pack(&bits, &mut out);
    String::from_utf8(out).expect("ascii")
}

pub fn from_sparse6(line: &str) -> Result<Graph, FormatError> {
    let line = line.strip_prefix(S6_HEADER).unwrap_or(line);
    let line = line.trim_end_matches(['\n', '\r']);
    if line.starts_with(';') {
        return Err(FormatError::Incremental);
    }
    let data = line.strip_prefix(':').ok_or(FormatError::Empty)?.as_bytes();
    if data.is_empty() {
        return Err(FormatError::TruncatedSize);
    }
    check_bytes(data, 1)?;
    let (n, rest) = decode_size(data)?;
    if n > MAX_VERTICES as u64 {
        return Err(FormatError::TooLarge(n));
    }
    let n = n as usize;
    let k = sparse6_k(n);
    let bits: Vec<bool> = unpack(rest).collect();
    let mut edges = Vec::new();
    let mut v = 0usize;
    let mut pos = 0;
    while pos + 1 + k <= bits.len() {
        let b = bits[pos];
        let x = bits[pos + 1..pos + 1 + k]
            .iter()
            .fold(0usize, |acc, &bit| acc << 1 | bit as usize);
        pos += 1 + k;
        if b {
            v += 1;
        }
        if v >= n {
            break;
        }
        if x > v {
            v = x;
        } else {
            edges.push((x, v));
        }
    }
    Ok(Graph::from_edges(n, edges).expect("decoded edges are in range"))
}

/// Decodes a line in either format (sparse6 lines start with `:`).
pub fn parse_line(line: &str) -> Result<Graph, FormatError> {
    let t = line.trim_end_matches(['\n', '\r']);
    if t.starts_with(':') || t.starts_with(';') || t.starts_with(S6_HEADER) {
        from_sparse6(t)
    } else {
        from_graph6(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k5_graph6() {
        assert_eq!(to_graph6(&Graph::complete(5)), "D~{");
        assert_eq!(from_graph6("D~{").unwrap(), Graph::complete(5));
    }

    #[test]
    fn known_strings() {
        // Petersen graph, as printed by nauty's geng/showg tooling
        let p = from_graph6("IheA@GUAo").unwrap();
        assert_eq!(p.order(), 10);
        assert_eq!(p.size(), 15);
        assert!(p.vertices().iter().all(|v| p.degree(v) == 3));
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(to_graph6(&Graph::path(2)), "A_");
        // sparse6 example from the format description: n = 7,
        // edges 0-1 0-2 1-2 5-6
        let g = from_sparse6(":Fa@x^").unwrap();
        assert_eq!(
            g,
            Graph::from_edges(7, [(0, 1), (0, 2), (1, 2), (5, 6)]).unwrap()
        );
        assert_eq!(to_sparse6(&g), ":Fa@x^");
    }

    #[test]
    fn large_size_field() {
        let g = Graph::cycle(70);
        let s = to_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(from_graph6(&s).unwrap(), g);
        assert_eq!(from_sparse6(&to_sparse6(&g)).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(from_graph6(""), Err(FormatError::Empty));
        assert!(matches!(
            from_graph6("D~"),
            Err(FormatError::WrongLength { .. })
        ));
        assert!(matches!(
            from_graph6("D~{ "),
            Err(FormatError::BadByte(b' ', 3))
        ));
        assert_eq!(from_graph6("A`"), Err(FormatError::NonzeroPadding));
        assert_eq!(from_sparse6(";Fa@x^"), Err(FormatError::Incremental));
        assert!(from_graph6(">>graph6<<D~{").is_ok());
    }

    #[test]
    fn sparse6_padding_special_case() {
        // n = 2^k with the last vertex edgeless: the padding must not be
        // misread as an edge.
        for n in [2usize, 4, 8, 16] {
            let g = Graph::from_edges(n, [(0, n - 2)].into_iter().filter(|e| e.0 != e.1)).unwrap();
            assert_eq!(from_sparse6(&to_sparse6(&g)).unwrap(), g, "n = {n}");
        }
    }
}
