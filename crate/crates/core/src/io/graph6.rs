//! The graph6 text encoding (not sparse6 or digraph6).

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;
/// Largest order expressible in the 8-byte size form.
pub const MAX_ORDER: u64 = (1 << 36) - 1;

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedGraph6(msg.into())
}

/// Decodes one graph6 line; a leading `>>graph6<<` header and a trailing
/// line terminator are ignored.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    match bytes.first() {
        None => return Err(malformed("empty line")),
        Some(b':') => return Err(malformed("sparse6 input is not supported")),
        Some(b'&') => return Err(malformed("digraph6 input is not supported")),
        _ => {}
    }
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(malformed(format!(
            "byte {} at offset {pos} is outside 63..=126",
            bytes[pos]
        )));
    }
    let (n, body) = decode_order(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(format!(
            "expected {expected} adjacency bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let pad = expected * 6 - bits;
    if pad > 0 && (body[expected - 1] - BIAS) & ((1 << pad) - 1) != 0 {
        return Err(malformed("nonzero padding bits"));
    }
    let mut edges = Vec::new();
    let (mut i, mut j) = (0usize, 1usize);
    for k in 0..bits {
        let byte = body[k / 6] - BIAS;
        if byte >> (5 - k % 6) & 1 == 1 {
            edges.push((i, j));
        }
        i += 1;
        if i == j {
            i = 0;
            j += 1;
        }
    }
    Graph::from_edges(n, edges)
}

fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let value = |digits: &[u8]| digits.iter().fold(0u64, |acc, &b| (acc << 6) | u64::from(b - BIAS));
    let (n, rest) = if bytes[0] != 126 {
        (u64::from(bytes[0] - BIAS), &bytes[1..])
    } else if bytes.get(1) != Some(&126) {
        if bytes.len() < 4 {
            return Err(malformed("truncated 4-byte size"));
        }
        (value(&bytes[1..4]), &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(malformed("truncated 8-byte size"));
        }
        (value(&bytes[2..8]), &bytes[8..])
    };
    let n = usize::try_from(n).map_err(|_| malformed("order does not fit in memory"))?;
    Ok((n, rest))
}

fn encode_order(n: u64, out: &mut Vec<u8>) {
    let digits = |count: u32, out: &mut Vec<u8>| {
        for k in (0..count).rev() {
            out.push(((n >> (6 * k)) & 63) as u8 + BIAS);
        }
    };
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        digits(3, out);
    } else {
        assert!(n <= MAX_ORDER, "graph6 cannot encode n = {n}");
        out.extend([126, 126]);
        digits(6, out);
    }
}

/// Canonical graph6 encoding, without header or newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_order(n as u64, &mut out);
    let bits = n * n.saturating_sub(1) / 2;
    let mut body = vec![0u8; bits.div_ceil(6)];
    for (i, j) in g.edges() {
        let k = j * (j - 1) / 2 + i;
        body[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(body.into_iter().map(|b| b + BIAS));
    String::from_utf8(out).expect("graph6 is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(parse_graph6("A?").unwrap(), Graph::empty(2));
        assert_eq!(parse_graph6("Dhc\n").unwrap(), Graph::cycle(5));
        assert_eq!(write_graph6(&Graph::complete(2)), "A_");
        assert_eq!(write_graph6(&Graph::empty(2)), "A?");
        assert_eq!(write_graph6(&Graph::cycle(5)), "Dhc");
        assert_eq!(parse_graph6(">>graph6<<Dhc").unwrap(), Graph::cycle(5));
        assert_eq!(write_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0));
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "A_?", "A", "D", "Dh", "A`", ":Fa@x^", "&A_", "A\u{7f}", "A >"] {
            assert!(matches!(parse_graph6(bad), Err(Error::MalformedGraph6(_))), "{bad:?}");
        }
        // C5 with a padding bit set
        assert!(parse_graph6("Dhd").is_err());
    }

    #[test]
    fn extended_size_forms() {
        let g = Graph::path(100);
        let s = write_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        let mut long = vec![126u8, 126];
        long.extend([63, 63, 63, 63, 64, 63]);
        let (n, rest) = decode_order(&long).unwrap();
        assert_eq!((n, rest.len()), (64, 0));
        let mut out = Vec::new();
        encode_order(300_000, &mut out);
        assert_eq!(out.len(), 8);
        assert_eq!(decode_order(&out).unwrap().0, 300_000);
        let mut out = Vec::new();
        encode_order(1_000_000, &mut out);
        assert_eq!(decode_order(&out).unwrap().0, 1_000_000);
    }
}
