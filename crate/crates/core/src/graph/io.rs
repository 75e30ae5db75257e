//! Text formats: the `n m` edge list and graph6.
//!
//! Both parsers produce an [`EdgeList`], which has no vertex-count limit, so
//! files too large for the bitset tier can still be read, converted and
//! written back. Conversion to [`Graph`] enforces the 64-vertex cap.

use std::fmt::Write as _;

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

/// Optional header that may precede a graph6 string.
pub const GRAPH6_HEADER: &str = ">>graph6<<";

/// Largest order the graph6 size field can express.
const GRAPH6_MAX_N: usize = 68_719_476_735;

/// Unbounded graph representation used for I/O: vertex count plus edges
/// normalised to `u < v`, sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl EdgeList {
    /// Validates endpoints, rejects loops, and normalises the edge list.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            out.push((u.min(v), u.max(v)));
        }
        out.sort_unstable();
        out.dedup();
        Ok(EdgeList { n, edges: out })
    }

    pub fn to_graph(&self) -> Result<Graph> {
        if self.n > MAX_VERTICES {
            return Err(Error::TooLarge {
                n: self.n,
                limit: MAX_VERTICES,
            });
        }
        Graph::new(self.n, self.edges.iter().copied())
    }

    /// Parses the edge-list format: a header line `n m` followed by exactly
    /// `m` lines `u v`. Text after `#` is ignored, as are blank lines.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::EdgeList {
                    line: line_no,
                    msg: format!("expected two integers, found {} fields", fields.len()),
                });
            }
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|_| Error::EdgeList {
                    line: line_no,
                    msg: format!("`{s}` is not a non-negative integer"),
                })
            };
            let (a, b) = (parse(fields[0])?, parse(fields[1])?);
            match header {
                None => header = Some((a, b)),
                Some((n, m)) => {
                    if edges.len() == m {
                        return Err(Error::EdgeList {
                            line: line_no,
                            msg: format!("more than the declared {m} edges"),
                        });
                    }
                    if a >= n || b >= n {
                        return Err(Error::EdgeList {
                            line: line_no,
                            msg: format!("endpoint out of range for n = {n}"),
                        });
                    }
                    if a == b {
                        return Err(Error::EdgeList {
                            line: line_no,
                            msg: format!("loop edge ({a}, {b})"),
                        });
                    }
                    edges.push((a, b));
                }
            }
        }
        let Some((n, m)) = header else {
            return Err(Error::EdgeList {
                line: 0,
                msg: "missing `n m` header".into(),
            });
        };
        if edges.len() != m {
            return Err(Error::EdgeList {
                line: 0,
                msg: format!("declared {m} edges, found {}", edges.len()),
            });
        }
        EdgeList::new(n, edges)
    }

    /// Writes the edge-list format; `m` counts distinct edges.
    pub fn to_edge_list_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Decodes one graph6 string. A leading `>>graph6<<` header and
    /// surrounding whitespace are accepted.
    pub fn from_graph6(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
        let bytes = s.as_bytes();
        if bytes.is_empty() {
            return Err(Error::Graph6("empty string".into()));
        }
        if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
            return Err(Error::Graph6(format!(
                "byte {pos} ({:#04x}) outside the printable range 63..=126",
                bytes[pos]
            )));
        }
        let (n, body) = decode_size(bytes)?;
        let bits = n * n.saturating_sub(1) / 2;
        let expected = bits.div_ceil(6);
        if body.len() != expected {
            return Err(Error::Graph6(format!(
                "expected {expected} data bytes for n = {n}, found {}",
                body.len()
            )));
        }
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                let byte = body[k / 6] - 63;
                if byte >> (5 - k % 6) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        if bits % 6 != 0 {
            let tail = body[bits / 6] - 63;
            let pad = 6 - bits % 6;
            if tail & ((1 << pad) - 1) != 0 {
                return Err(Error::Graph6("non-zero padding bits".into()));
            }
        }
        EdgeList::new(n, edges)
    }

    /// Encodes as graph6 without header or trailing newline.
    pub fn to_graph6(&self) -> String {
        let n = self.n;
        assert!(n <= GRAPH6_MAX_N);
        let mut out: Vec<u8> = Vec::new();
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
        let bits = n * n.saturating_sub(1) / 2;
        let mut data = vec![0u8; bits.div_ceil(6)];
        for &(u, v) in &self.edges {
            // column-major upper triangle: pair (i, j), i < j, sits at j(j-1)/2 + i
            let k = v * (v - 1) / 2 + u;
            data[k / 6] |= 1 << (5 - k % 6);
        }
        out.extend(data.into_iter().map(|b| b + 63));
        String::from_utf8(out).expect("graph6 is ASCII")
    }
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let short = || Error::Graph6("truncated size field".into());
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        let field = bytes.get(2..8).ok_or_else(short)?;
        let n = field.iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        if n <= 258_047 {
            return Err(Error::Graph6(format!("non-minimal size encoding of n = {n}")));
        }
        return Ok((n, &bytes[8..]));
    }
    let field = bytes.get(1..4).ok_or_else(short)?;
    let n = field.iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
    if n <= 62 {
        return Err(Error::Graph6(format!("non-minimal size encoding of n = {n}")));
    }
    Ok((n, &bytes[4..]))
}
