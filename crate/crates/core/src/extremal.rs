//! The extremal family `G_k`, the private-neighbor partition of a secure
//! dominating set, and two independent detectors for a spanning `G_k`.
//!
//! `G_k` has a hub `v`, spokes `v_1..v_k`, rim vertices `w_1..w_2k` and a
//! triangle pair `u_i^1, u_i^2` per spoke, with edges
//! `v w_j`, `v_i w_{2i-1}`, `v_i w_{2i}`, `v_i u_i^1`, `v_i u_i^2`, `u_i^1 u_i^2`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::secure::{self, serialize_set};

/// A labeling of a graph's vertices exhibiting `G_k` as a spanning subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalWitness {
    pub k: usize,
    pub hub: usize,
    pub spokes: Vec<usize>,
    /// `rim[2i]` and `rim[2i + 1]` are the rim vertices of `spokes[i]`.
    pub rim: Vec<usize>,
    pub triangles: Vec<(usize, usize)>,
}

impl ExtremalWitness {
    /// Edges of `G_k` under this labeling.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(7 * self.k);
        for &w in &self.rim {
            out.push((self.hub, w));
        }
        for (i, &s) in self.spokes.iter().enumerate() {
            out.push((s, self.rim[2 * i]));
            out.push((s, self.rim[2 * i + 1]));
            let (a, b) = self.triangles[i];
            out.extend([(s, a), (s, b), (a, b)]);
        }
        out
    }

    /// `{hub} ∪ spokes`, the secure dominating set of size `k + 1`.
    pub fn secure_set(&self) -> VertexSet {
        self.spokes.iter().copied().collect::<VertexSet>().with(self.hub)
    }

    /// Checks that the labels are a bijection onto `V(g)` and that every
    /// labeled `G_k` edge is an edge of `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let k = self.k;
        if k < 2
            || self.spokes.len() != k
            || self.rim.len() != 2 * k
            || self.triangles.len() != k
            || g.n() != 5 * k + 1
        {
            return false;
        }
        let mut labels = vec![self.hub];
        labels.extend(&self.spokes);
        labels.extend(&self.rim);
        for &(a, b) in &self.triangles {
            labels.extend([a, b]);
        }
        if labels.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let distinct: VertexSet = labels.iter().copied().collect();
        if distinct != g.vertices() {
            return false;
        }
        self.edges().into_iter().all(|(a, b)| g.has_edge(a, b))
    }
}

/// `G_k` on `5k + 1` vertices together with its labeling: hub `0`, spokes
/// `1..=k`, rim `k+1..=3k`, and triangle pair `(3k + 2i - 1, 3k + 2i)` for
/// spoke `i`.
pub fn build_extremal(k: usize) -> Result<(Graph, ExtremalWitness)> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    let n = 5 * k + 1;
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::TooLarge {
            n,
            limit: crate::graph::MAX_VERTICES,
        });
    }
    let witness = ExtremalWitness {
        k,
        hub: 0,
        spokes: (1..=k).collect(),
        rim: (k + 1..=3 * k).collect(),
        triangles: (1..=k).map(|i| (3 * k + 2 * i - 1, 3 * k + 2 * i)).collect(),
    };
    let g = Graph::new(n, witness.edges())?;
    Ok((g, witness))
}

/// Extracts `k` from `n = 5k + 1`, `k >= 2`.
pub fn extremal_k(n: usize) -> Result<usize> {
    if n >= 11 && (n - 1).is_multiple_of(5) {
        Ok((n - 1) / 5)
    } else {
        Err(Error::NotFiveKPlusOne { n })
    }
}

/// Per-vertex defense counts inside a [`PartitionProfile`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DefenseCount {
    pub vertex: usize,
    pub epn: usize,
    /// Outside vertices this vertex defends.
    pub defends: usize,
    /// How many of those lie in `C`.
    pub defends_in_c: usize,
}

/// Bookkeeping for a secure dominating set `S`: `S_i` holds the vertices
/// with exactly `i` external private neighbors, and `C` the outside vertices
/// with at least two neighbors in `S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionProfile {
    #[serde(serialize_with = "serialize_set")]
    pub s2: VertexSet,
    #[serde(serialize_with = "serialize_set")]
    pub s1: VertexSet,
    #[serde(serialize_with = "serialize_set")]
    pub s0: VertexSet,
    #[serde(serialize_with = "serialize_set")]
    pub c_set: VertexSet,
    pub x2: usize,
    pub x1: usize,
    pub x0: usize,
    pub c: usize,
    pub x: usize,
    pub y: usize,
    /// `c = 2 x2 + 3 x1 + 4 x0 - 4`.
    pub extremal_count_holds: bool,
    pub defense: Vec<DefenseCount>,
}

impl PartitionProfile {
    /// Whether `y = 2 x2 + x1 + c`.
    pub fn counts_balance(&self) -> bool {
        self.y == 2 * self.x2 + self.x1 + self.c
    }
}

pub fn partition_profile(g: &Graph, s: VertexSet) -> Result<PartitionProfile> {
    g.check_set(s)?;
    if secure::is_secure_dominating(g, s)?.is_none() {
        return Err(Error::NotSecure);
    }
    let mut parts = [VertexSet::EMPTY; 3];
    let mut defense = Vec::with_capacity(s.len());
    let outside = g.vertices() - s;
    let c_set: VertexSet = outside
        .iter()
        .filter(|&u| (g.neighbors(u) & s).len() >= 2)
        .collect();
    for v in s {
        let private = secure::epn_unchecked(g, v, s);
        if private.len() > 2 {
            return Err(Error::EpnTooLarge {
                vertex: v,
                size: private.len(),
            });
        }
        parts[private.len()].insert(v);
        let defended: VertexSet = (g.neighbors(v) & outside)
            .iter()
            .filter(|&u| secure::epn_defends(g, v, u, s))
            .collect();
        defense.push(DefenseCount {
            vertex: v,
            epn: private.len(),
            defends: defended.len(),
            defends_in_c: (defended & c_set).len(),
        });
    }
    let [s0, s1, s2] = parts;
    let (x0, x1, x2, c) = (s0.len(), s1.len(), s2.len(), c_set.len());
    Ok(PartitionProfile {
        s2,
        s1,
        s0,
        c_set,
        x2,
        x1,
        x0,
        c,
        x: s.len(),
        y: outside.len(),
        extremal_count_holds: c as i64 == 2 * x2 as i64 + 3 * x1 as i64 + 4 * x0 as i64 - 4,
        defense,
    })
}

/// The bipartite graph between `S` and `C` keeping only edges of `g` that
/// cross. Vertices are renumbered increasingly; `map` gives the originals.
#[derive(Clone, Debug)]
pub struct BipartiteLayout {
    pub graph: Graph,
    pub x: VertexSet,
    pub y: VertexSet,
    pub map: Vec<usize>,
}

pub fn bipartite_between(g: &Graph, s: VertexSet, c: VertexSet) -> Result<BipartiteLayout> {
    g.check_set(s)?;
    g.check_set(c)?;
    if s.intersects(c) {
        return Err(Error::NotPartition);
    }
    let (induced, map) = g.induced_subgraph(s | c)?;
    let edges = induced
        .edges()
        .filter(|&(a, b)| s.contains(map[a]) != s.contains(map[b]));
    let graph = Graph::new(map.len(), edges)?;
    let x = (0..map.len()).filter(|&i| s.contains(map[i])).collect();
    let y = (0..map.len()).filter(|&i| c.contains(map[i])).collect();
    Ok(BipartiteLayout { graph, x, y, map })
}

#[derive(Clone, Copy, Debug)]
struct Unit {
    spoke: usize,
    rim: (usize, usize),
    tri: (usize, usize),
}

impl Unit {
    fn vertices(&self) -> VertexSet {
        [self.spoke, self.rim.0, self.rim.1, self.tri.0, self.tri.1]
            .into_iter()
            .collect()
    }
}

/// Searches for a spanning `G_k` the way the extremal structure forces it:
/// a hub whose neighbors supply the rim, and spokes that each own two rim
/// vertices and close a triangle with two further vertices. Hubs are tried
/// in increasing order; within a hub, the smallest uncovered vertex is
/// assigned a role (spoke, rim or triangle vertex) first.
pub fn detect_extremal_structural(g: &Graph) -> Result<Option<ExtremalWitness>> {
    let k = extremal_k(g.n())?;
    for hub in 0..g.n() {
        if g.degree(hub) < 2 * k {
            continue;
        }
        let mut units = Vec::with_capacity(k);
        if cover(g, hub, g.vertices().without(hub), &mut units) {
            units.sort_by_key(|u| u.spoke);
            return Ok(Some(ExtremalWitness {
                k,
                hub,
                spokes: units.iter().map(|u| u.spoke).collect(),
                rim: units.iter().flat_map(|u| [u.rim.0, u.rim.1]).collect(),
                triangles: units.iter().map(|u| u.tri).collect(),
            }));
        }
    }
    Ok(None)
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn pairs(s: VertexSet) -> impl Iterator<Item = (usize, usize)> {
    s.iter()
        .flat_map(move |a| s.iter().filter(move |&b| b > a).map(move |b| (a, b)))
}

fn cover(g: &Graph, hub: usize, uncovered: VertexSet, units: &mut Vec<Unit>) -> bool {
    let Some(x) = uncovered.first() else {
        return true;
    };
    let rest = uncovered.without(x);
    let hub_side = g.neighbors(hub);
    let mut candidates = Vec::new();

    // x as a spoke
    let rim_pool = g.neighbors(x) & hub_side & rest;
    for (a, b) in pairs(rim_pool) {
        let tri_pool = (g.neighbors(x) & rest).without(a).without(b);
        for (c, d) in pairs(tri_pool).filter(|&(c, d)| g.has_edge(c, d)) {
            candidates.push(Unit {
                spoke: x,
                rim: (a, b),
                tri: (c, d),
            });
        }
    }
    // x as a rim vertex
    if hub_side.contains(x) {
        for s in g.neighbors(x) & rest {
            let partner_pool = (g.neighbors(s) & hub_side & rest).without(s);
            for b in partner_pool {
                let tri_pool = (g.neighbors(s) & rest).without(b);
                for (c, d) in pairs(tri_pool).filter(|&(c, d)| g.has_edge(c, d)) {
                    candidates.push(Unit {
                        spoke: s,
                        rim: ordered(x, b),
                        tri: (c, d),
                    });
                }
            }
        }
    }
    // x as a triangle vertex
    for s in g.neighbors(x) & rest {
        for d in g.neighbors(s) & g.neighbors(x) & rest {
            let rim_pool = (g.neighbors(s) & hub_side & rest).without(d);
            for (a, b) in pairs(rim_pool) {
                candidates.push(Unit {
                    spoke: s,
                    rim: (a, b),
                    tri: ordered(x, d),
                });
            }
        }
    }

    for unit in candidates {
        units.push(unit);
        if cover(g, hub, uncovered - unit.vertices(), units) {
            return true;
        }
        units.pop();
    }
    false
}

/// Generic backtracking embedding of `G_k` onto all of `V(g)`: pattern
/// vertices are placed one at a time, each on an unused host vertex of
/// sufficient degree adjacent to the images of its placed neighbors.
pub fn spanning_subgraph_oracle(g: &Graph, k: usize) -> Result<Option<ExtremalWitness>> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    let expected = 5 * k + 1;
    if g.n() != expected {
        return Err(Error::SizeMismatch {
            n: g.n(),
            k,
            expected,
        });
    }
    let (pattern, _) = build_extremal(k)?;
    let order = placement_order(&pattern);
    let mut image = vec![usize::MAX; expected];
    if !embed(&pattern, g, &order, 0, VertexSet::EMPTY, &mut image) {
        return Ok(None);
    }
    Ok(Some(ExtremalWitness {
        k,
        hub: image[0],
        spokes: (1..=k).map(|i| image[i]).collect(),
        rim: (k + 1..=3 * k).map(|i| image[i]).collect(),
        triangles: (1..=k)
            .map(|i| (image[3 * k + 2 * i - 1], image[3 * k + 2 * i]))
            .collect(),
    }))
}

/// Places next the pattern vertex with the most already-placed neighbors,
/// breaking ties by degree and then by index.
fn placement_order(pattern: &Graph) -> Vec<usize> {
    let mut placed = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(pattern.n());
    while order.len() < pattern.n() {
        let next = (pattern.vertices() - placed)
            .iter()
            .max_by_key(|&p| {
                (
                    (pattern.neighbors(p) & placed).len(),
                    pattern.degree(p),
                    std::cmp::Reverse(p),
                )
            })
            .unwrap();
        order.push(next);
        placed.insert(next);
    }
    order
}

fn embed(
    pattern: &Graph,
    host: &Graph,
    order: &[usize],
    depth: usize,
    used: VertexSet,
    image: &mut [usize],
) -> bool {
    let Some(&p) = order.get(depth) else {
        return true;
    };
    let placed_neighbors: Vec<usize> = order[..depth]
        .iter()
        .copied()
        .filter(|&q| pattern.has_edge(p, q))
        .collect();
    let mut candidates = host.vertices() - used;
    for &q in &placed_neighbors {
        candidates &= host.neighbors(image[q]);
    }
    for t in candidates {
        if host.degree(t) < pattern.degree(p) {
            continue;
        }
        image[p] = t;
        if embed(pattern, host, order, depth + 1, used.with(t), image) {
            return true;
        }
    }
    image[p] = usize::MAX;
    false
}
