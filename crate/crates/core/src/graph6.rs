//! The graph6 text encoding.
//!
//! A line is the order `N(n)` followed by the upper triangle of the adjacency
//! matrix in column order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed six
//! bits per byte, each byte offset by 63. Orders up to 62 use one header byte;
//! 63 and 64 use the `~` prefixed three-byte form.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const OPTIONAL_HEADER: &str = ">>graph6<<";

pub fn write(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    out
}

pub fn read(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\r', '\n']);
    let line = line.strip_prefix(OPTIONAL_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!(
            "byte {b:#04x} outside the printable range 63..=126"
        )));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::Graph6("empty line".into())),
        [126, 126, ..] => return Err(Error::TooManyVertices(usize::MAX)),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated extended order header".into()));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    if n > MAX_ORDER {
        return Err(Error::TooManyVertices(n));
    }
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if body.len() != needed {
        return Err(Error::Graph6(format!(
            "order {n} needs {needed} data bytes, found {}",
            body.len()
        )));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if k % 6 != 0 && (body[k / 6] - 63) & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    Ok(Graph::from_rows_unchecked(rows))
}

/// Reads every non-blank line of `text`.
pub fn read_all(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| read(l.trim()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_encodings() {
        // Reference strings from the format description and nauty's tools.
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write(&g), "DQc");
        assert_eq!(read("DQc").unwrap(), g);
        assert_eq!(write(&Graph::empty(0).unwrap()), "?");
        assert_eq!(write(&Graph::empty(1).unwrap()), "@");
        assert_eq!(write(&Graph::path(4).unwrap()), "Ch");
        assert_eq!(write(&Graph::cycle(5).unwrap()), "Dhc");
        assert_eq!(write(&Graph::complete(4).unwrap()), "C~");
    }

    #[test]
    fn extended_header_for_large_orders() {
        let g = Graph::cycle(63).unwrap();
        let s = write(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(read(&s).unwrap(), g);
        let k64 = Graph::complete(64).unwrap();
        assert_eq!(read(&write(&k64)).unwrap(), k64);
    }

    #[test]
    fn malformed_inputs() {
        assert!(read("").is_err());
        assert!(read("Dh").is_err());
        assert!(read("Dhcc").is_err());
        assert!(read("D h").is_err());
        assert_eq!(read("~?@@"), Err(Error::TooManyVertices(65)));
        assert!(read("Bx").is_err()); // padding bit set
        assert_eq!(read("Bw").unwrap(), Graph::complete(3).unwrap());
        assert_eq!(read(">>graph6<<Ch").unwrap(), Graph::path(4).unwrap());
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..=64, seed in any::<u64>()) {
            let mut state = seed | 1;
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    state ^= state << 13; state ^= state >> 7; state ^= state << 17;
                    if state & 3 == 0 { edges.push((i, j)); }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            prop_assert_eq!(read(&write(&g)).unwrap(), g);
        }
    }
}
