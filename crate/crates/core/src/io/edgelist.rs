//! Plain-text edge lists:
//!
//! ```text
//! # comment
//! p <n> <m>
//! e <u> <v>      (0-based, u < v, m lines)
//! ```

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("missing 'p <n> <m>' header")]
    MissingHeader,
    #[error("line {0}: malformed header")]
    BadHeader(usize),
    #[error("line {0}: repeated header")]
    RepeatedHeader(usize),
    #[error("line {0}: malformed edge line")]
    BadEdge(usize),
    #[error("line {line}: edge ({u}, {v}) must satisfy u < v < {n}")]
    EdgeOutOfOrder {
        line: usize,
        u: Vertex,
        v: Vertex,
        n: usize,
    },
    #[error("line {0}: duplicate edge")]
    DuplicateEdge(usize),
    #[error("line {0}: unrecognised line")]
    UnknownLine(usize),
    #[error("header declares {declared} edges, found {found}")]
    CountMismatch { declared: usize, found: usize },
}

fn numbers<const N: usize>(fields: &[&str]) -> Option<[usize; N]> {
    if fields.len() != N {
        return None;
    }
    let mut out = [0; N];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f.parse().ok()?;
    }
    Some(out)
}

pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_ascii_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(FormatError::RepeatedHeader(lineno));
                }
                let [n, m] = numbers::<2>(&fields[1..]).ok_or(FormatError::BadHeader(lineno))?;
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = header.ok_or(FormatError::MissingHeader)?;
                let [u, v] = numbers::<2>(&fields[1..]).ok_or(FormatError::BadEdge(lineno))?;
                if u >= v || v >= n {
                    return Err(FormatError::EdgeOutOfOrder {
                        line: lineno,
                        u,
                        v,
                        n,
                    });
                }
                if !seen.insert((u, v)) {
                    return Err(FormatError::DuplicateEdge(lineno));
                }
                edges.push((u, v));
            }
            _ => return Err(FormatError::UnknownLine(lineno)),
        }
    }
    let (n, m) = header.ok_or(FormatError::MissingHeader)?;
    if m != edges.len() {
        return Err(FormatError::CountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Graph::new(n, edges).expect("edges validated above"))
}

/// Canonical serialization: header, then edges in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}
