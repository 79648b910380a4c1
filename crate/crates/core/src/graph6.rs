//! graph6 encoding.
//!
//! The header encodes the order `n` in one (`n <= 62`), four (`n <= 258047`)
//! or eight bytes. The body packs the upper triangle of the adjacency matrix
//! column by column (`(0,1), (0,2), (1,2), (0,3), ...`) into 6-bit groups,
//! most significant bit first, each offset by 63.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("malformed graph6 header")]
    MalformedHeader,
    #[error("character {0:#04x} at byte {1} is outside the graph6 range 0x3f-0x7e")]
    InvalidCharacter(u8, usize),
    #[error("graph6 body is truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data after graph6 body ({0} extra bytes)")]
    TrailingGarbage(usize),
    #[error("nonzero padding bits in graph6 body")]
    NonzeroPadding,
    #[error("graph6 order {0} is not supported")]
    UnsupportedOrder(u64),
}

const MAX_ORDER: u64 = 68_719_476_735;

fn push_order(out: &mut Vec<u8>, n: u64) {
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

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_order(&mut out, n as u64);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn sextet(bytes: &[u8], at: usize) -> Result<u64, Graph6Error> {
    match bytes.get(at) {
        Some(&b) if (63..=126).contains(&b) => Ok(u64::from(b - 63)),
        Some(&b) => Err(Graph6Error::InvalidCharacter(b, at)),
        None => Err(Graph6Error::MalformedHeader),
    }
}

/// Parses one graph6 line. Surrounding whitespace is ignored.
pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim().as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::InvalidCharacter(bytes[pos], pos));
    }
    let (n, body_start) = match bytes.first() {
        None => return Err(Graph6Error::MalformedHeader),
        Some(126) => {
            if bytes.get(1) == Some(&126) {
                let mut n = 0;
                for k in 2..8 {
                    n = (n << 6) | sextet(bytes, k)?;
                }
                if n <= 258_047 {
                    return Err(Graph6Error::MalformedHeader);
                }
                (n, 8)
            } else {
                let mut n = 0;
                for k in 1..4 {
                    n = (n << 6) | sextet(bytes, k)?;
                }
                if n <= 62 {
                    return Err(Graph6Error::MalformedHeader);
                }
                (n, 4)
            }
        }
        Some(_) => (sextet(bytes, 0)?, 1),
    };
    if n == 0 || n > MAX_ORDER || n > usize::MAX as u64 {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let n = n as usize;
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingGarbage(body.len() - expected));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let b = body[k / 6] - 63;
            if b & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if !bits.is_multiple_of(6) {
        let last = body[expected - 1] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(Graph::new(n, &edges).expect("graph6 body yields a simple graph"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decodes_k4() {
        let g = decode("C~").unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 6);
    }

    #[test]
    fn encodes_k1() {
        assert_eq!(encode(&Graph::new(1, &[]).unwrap()), "@");
    }

    #[test]
    fn hand_decoded_path() {
        // P3 with edges 0-1, 1-2: bits (0,1)=1 (0,2)=0 (1,2)=1 -> 101000 = 40
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(encode(&g), "Bg");
        assert_eq!(decode("Bg").unwrap(), g);
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(decode(""), Err(Graph6Error::MalformedHeader));
        assert_eq!(decode("?"), Err(Graph6Error::UnsupportedOrder(0)));
        assert_eq!(decode("C~~"), Err(Graph6Error::TrailingGarbage(1)));
        assert_eq!(
            decode("C"),
            Err(Graph6Error::Truncated {
                expected: 1,
                found: 0
            })
        );
        assert_eq!(decode("!!!"), Err(Graph6Error::InvalidCharacter(b'!', 0)));
        assert_eq!(decode("Bh"), Err(Graph6Error::NonzeroPadding));
        assert_eq!(decode("~??"), Err(Graph6Error::MalformedHeader));
        assert_eq!(decode("~??}"), Err(Graph6Error::MalformedHeader));
    }

    #[test]
    fn long_header_roundtrip() {
        let edges: Vec<_> = (0..100).map(|i| (i, (i + 1) % 100)).collect();
        let g = Graph::new(100, &edges).unwrap();
        let text = encode(&g);
        assert!(text.starts_with("~?@c"));
        assert_eq!(decode(&text).unwrap(), g);
    }
}
