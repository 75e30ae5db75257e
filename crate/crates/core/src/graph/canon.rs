//! Canonical labeling by equitable refinement and individualization.
//!
//! The search tree individualizes one vertex of the first non-singleton
//! cell at each level, refines to an equitable partition, and records the
//! relabeled adjacency at every discrete leaf. The canonical labeling is the
//! leaf with the lexicographically largest adjacency rows. Leaves that
//! reproduce the first or best leaf's rows yield automorphisms, which prune
//! siblings in the same orbit of the stabilizer of the current prefix.

use std::fmt;

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Largest order accepted by the canonical labeler.
pub const CANON_MAX_VERTICES: usize = 32;

/// Label-invariant encoding of an isomorphism class: the vertex count
/// followed by the canonically ordered upper-triangle adjacency bits.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("CanonicalForm(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        f.write_str(")")
    }
}

/// A canonical labeling together with the form it produces.
#[derive(Clone, Debug)]
pub struct Labeling {
    pub form: CanonicalForm,
    /// `order[i]` is the original vertex placed at canonical position `i`.
    pub order: Vec<usize>,
}

impl Labeling {
    /// Canonical position of each original vertex.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|l| l.form)
}

pub fn canonical_labeling(g: &Graph) -> Result<Labeling> {
    let n = g.n();
    if n > CANON_MAX_VERTICES {
        return Err(Error::TooLarge {
            n,
            limit: CANON_MAX_VERTICES,
        });
    }
    let mut search = Search {
        g,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    let root = if n == 0 { Vec::new() } else { vec![g.vertices()] };
    search.visit(root, &mut Vec::new());
    let best = search.best.expect("search reaches at least one leaf");
    Ok(Labeling {
        form: encode(n, &best.rows),
        order: best.order,
    })
}

struct Leaf {
    rows: Vec<u64>,
    order: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    /// Automorphisms as vertex maps.
    autos: Vec<Vec<u8>>,
}

impl Search<'_> {
    fn visit(&mut self, cells: Vec<VertexSet>, prefix: &mut Vec<usize>) {
        let cells = refine(self.g, cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[target];
        let mut tried = VertexSet::EMPTY;
        for x in cell {
            if !tried.is_empty() && self.same_orbit_as_any(x, tried, prefix) {
                continue;
            }
            tried.insert(x);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(VertexSet::singleton(x));
            child.push(cell.without(x));
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(x);
            self.visit(child, prefix);
            prefix.pop();
        }
    }

    /// Orbit test under the group generated by known automorphisms that fix
    /// `prefix` pointwise.
    fn same_orbit_as_any(&self, x: usize, tried: VertexSet, prefix: &[usize]) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        let mut any = false;
        for sigma in &self.autos {
            if prefix.iter().any(|&p| sigma[p] as usize != p) {
                continue;
            }
            any = true;
            for (v, &image) in sigma.iter().enumerate().take(n) {
                let (a, b) = (find(&mut parent, v), find(&mut parent, image as usize));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let rx = find(&mut parent, x);
        tried.iter().any(|y| find(&mut parent, y) == rx)
    }

    fn leaf(&mut self, cells: &[VertexSet]) {
        let order: Vec<usize> = cells.iter().map(|c| c.first().unwrap()).collect();
        let rows = relabeled_rows(self.g, &order);
        let leaf = Leaf { rows, order };
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                rows: leaf.rows.clone(),
                order: leaf.order.clone(),
            });
            self.best = Some(leaf);
            return;
        };
        if leaf.rows == first.rows {
            let sigma = automorphism(&first.order, &leaf.order);
            self.autos.push(sigma);
            return;
        }
        let best = self.best.as_ref().unwrap();
        match leaf.rows.cmp(&best.rows) {
            std::cmp::Ordering::Equal => {
                let sigma = automorphism(&best.order, &leaf.order);
                self.autos.push(sigma);
            }
            std::cmp::Ordering::Greater => self.best = Some(leaf),
            std::cmp::Ordering::Less => {}
        }
    }
}

/// Maps `from[i]` to `to[i]`; both leaves realise the same relabeled graph.
fn automorphism(from: &[usize], to: &[usize]) -> Vec<u8> {
    let mut sigma = vec![0u8; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        sigma[a] = b as u8;
    }
    sigma
}

/// Row `i` holds the neighbors of `order[i]`, with canonical position `j`
/// stored at bit `63 - j` so numeric order matches bit-string order.
fn relabeled_rows(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let mut pos = [0usize; 64];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    (0..n)
        .map(|i| {
            g.neighbors(order[i])
                .iter()
                .fold(0u64, |acc, u| acc | 1u64 << (63 - pos[u]))
        })
        .collect()
}

fn encode(n: usize, rows: &[u64]) -> CanonicalForm {
    let mut out = vec![n as u8];
    let mut byte = 0u8;
    let mut nbits = 0;
    for (i, &row) in rows.iter().enumerate() {
        for j in i + 1..n {
            byte = byte << 1 | (row >> (63 - j) & 1) as u8;
            nbits += 1;
            if nbits == 8 {
                out.push(byte);
                byte = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(byte << (8 - nbits));
    }
    CanonicalForm(out)
}

/// Splits cells by neighbor counts into other cells until the partition is
/// equitable. New cells are ordered by increasing count, which keeps the
/// result label-invariant.
fn refine(g: &Graph, mut cells: Vec<VertexSet>) -> Vec<VertexSet> {
    let n = g.n();
    let mut buckets = vec![VertexSet::EMPTY; n + 1];
    'again: loop {
        for s in 0..cells.len() {
            let splitter = cells[s];
            let mut next: Vec<VertexSet> = Vec::with_capacity(cells.len() + 2);
            for &cell in &cells {
                if cell.len() == 1 {
                    next.push(cell);
                    continue;
                }
                let (mut lo, mut hi) = (n, 0);
                for v in cell {
                    let k = (g.neighbors(v) & splitter).len();
                    buckets[k].insert(v);
                    lo = lo.min(k);
                    hi = hi.max(k);
                }
                for bucket in &mut buckets[lo..=hi] {
                    if !bucket.is_empty() {
                        next.push(*bucket);
                        *bucket = VertexSet::EMPTY;
                    }
                }
            }
            if next.len() > cells.len() {
                cells = next;
                continue 'again;
            }
        }
        return cells;
    }
}
