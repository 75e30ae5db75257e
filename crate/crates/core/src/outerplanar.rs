//! Outerplanarity recognition.
//!
//! The fast path splits the graph into blocks and reduces each 2-connected
//! block by repeatedly removing a degree-2 vertex `v` with neighbors `a`,
//! `b` and inserting the edge `ab`. A 2-connected outerplanar graph has a
//! unique Hamiltonian outer cycle, `v` sits on it between `a` and `b`, and
//! the reduction stays outerplanar exactly when `ab` ends up on the outer
//! cycle of the reduced block, i.e. when `{a, b}` does not separate it.
//!
//! [`find_forbidden_subdivision`] is an independent, exponential oracle that
//! searches directly for a subdivided `K4` or `K_{2,3}`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

/// Default vertex cap for the subdivision oracle.
pub const SUBDIVISION_ORACLE_CAP: usize = 12;

pub fn is_outerplanar(g: &Graph) -> bool {
    let n = g.n();
    if n >= 2 && g.m() > 2 * n - 3 {
        return false;
    }
    blocks(g)
        .into_iter()
        .all(|b| b.len() <= 3 || biconnected_is_outerplanar(g, b))
}

/// Vertex sets of the blocks (maximal 2-connected subgraphs and bridges).
/// Isolated vertices form no block.
pub fn blocks(g: &Graph) -> Vec<VertexSet> {
    struct Dfs<'a> {
        g: &'a Graph,
        disc: [usize; MAX_VERTICES],
        low: [usize; MAX_VERTICES],
        time: usize,
        stack: Vec<usize>,
        out: Vec<VertexSet>,
    }
    impl Dfs<'_> {
        fn visit(&mut self, v: usize, parent: Option<usize>) {
            self.time += 1;
            self.disc[v] = self.time;
            self.low[v] = self.time;
            self.stack.push(v);
            for u in self.g.neighbors(v) {
                if self.disc[u] == 0 {
                    self.visit(u, Some(v));
                    self.low[v] = self.low[v].min(self.low[u]);
                    if self.low[u] >= self.disc[v] {
                        let mut block = VertexSet::singleton(v);
                        while let Some(w) = self.stack.pop() {
                            block.insert(w);
                            if w == u {
                                break;
                            }
                        }
                        self.out.push(block);
                    }
                } else if Some(u) != parent {
                    self.low[v] = self.low[v].min(self.disc[u]);
                }
            }
        }
    }
    let mut dfs = Dfs {
        g,
        disc: [0; MAX_VERTICES],
        low: [0; MAX_VERTICES],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..g.n() {
        if dfs.disc[v] == 0 {
            dfs.visit(v, None);
            dfs.stack.clear();
        }
    }
    dfs.out
}

fn biconnected_is_outerplanar(g: &Graph, block: VertexSet) -> bool {
    let mut rows = [VertexSet::EMPTY; MAX_VERTICES];
    for v in block {
        rows[v] = g.neighbors(v) & block;
    }
    let mut alive = block;
    loop {
        let k = alive.len();
        if k <= 3 {
            return true;
        }
        let m: usize = alive.iter().map(|v| rows[v].len()).sum::<usize>() / 2;
        if m > 2 * k - 3 {
            return false;
        }
        let Some(v) = alive.iter().find(|&v| rows[v].len() == 2) else {
            return false;
        };
        let (a, b) = (rows[v].first().unwrap(), rows[v].last().unwrap());
        alive.remove(v);
        rows[a].remove(v);
        rows[b].remove(v);
        rows[a].insert(b);
        rows[b].insert(a);
        if k > 4 {
            let rest = alive.without(a).without(b);
            let start = rest.first().unwrap();
            if reach_rows(&rows, start, rest) != rest {
                return false;
            }
        }
    }
}

fn reach_rows(rows: &[VertexSet], start: usize, within: VertexSet) -> VertexSet {
    let mut seen = VertexSet::singleton(start);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            next |= rows[v];
        }
        frontier = next & within & !seen;
        seen |= frontier;
    }
    seen
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SubdivisionKind {
    #[serde(rename = "K4")]
    K4,
    #[serde(rename = "K2,3")]
    K23,
}

/// A subdivided `K4` or `K_{2,3}` inside a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForbiddenWitness {
    pub kind: SubdivisionKind,
    /// For `K4` the four branch vertices; for `K_{2,3}` the two degree-3
    /// branch vertices followed by the three degree-2 ones.
    pub branch_vertices: Vec<usize>,
    /// One path per edge of the subdivided graph, listed endpoint to endpoint.
    pub paths: Vec<Vec<usize>>,
}

impl ForbiddenWitness {
    pub fn branch_set(&self) -> VertexSet {
        self.branch_vertices.iter().copied().collect()
    }

    /// Branch-vertex pairs that must be joined, in path order.
    fn required_pairs(kind: SubdivisionKind, b: &[usize]) -> Vec<(usize, usize)> {
        match kind {
            SubdivisionKind::K4 => vec![
                (b[0], b[1]),
                (b[0], b[2]),
                (b[0], b[3]),
                (b[1], b[2]),
                (b[1], b[3]),
                (b[2], b[3]),
            ],
            SubdivisionKind::K23 => vec![
                (b[0], b[2]),
                (b[0], b[3]),
                (b[0], b[4]),
                (b[1], b[2]),
                (b[1], b[3]),
                (b[1], b[4]),
            ],
        }
    }

    /// Re-checks the witness against `g` from scratch.
    pub fn verify(&self, g: &Graph) -> bool {
        let expected = match self.kind {
            SubdivisionKind::K4 => 4,
            SubdivisionKind::K23 => 5,
        };
        let branch = self.branch_set();
        if self.branch_vertices.len() != expected
            || branch.len() != expected
            || self.branch_vertices.iter().any(|&v| v >= g.n())
        {
            return false;
        }
        let pairs = Self::required_pairs(self.kind, &self.branch_vertices);
        if self.paths.len() != pairs.len() {
            return false;
        }
        let mut used_internal = VertexSet::EMPTY;
        for (path, &(s, t)) in self.paths.iter().zip(&pairs) {
            if path.len() < 2 || path[0] != s || path[path.len() - 1] != t {
                return false;
            }
            if path.iter().any(|&v| v >= g.n()) {
                return false;
            }
            if path.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return false;
            }
            for &v in &path[1..path.len() - 1] {
                if branch.contains(v) || used_internal.contains(v) {
                    return false;
                }
                used_internal.insert(v);
            }
        }
        true
    }
}

/// Searches for a `K4` or `K_{2,3}` subdivision with the default vertex cap.
pub fn find_forbidden_subdivision(g: &Graph) -> Result<Option<ForbiddenWitness>> {
    find_forbidden_subdivision_capped(g, SUBDIVISION_ORACLE_CAP)
}

/// Exhaustive search over branch sets and internally disjoint paths.
/// `K4` candidates are tried before `K_{2,3}`, each in lexicographic order.
pub fn find_forbidden_subdivision_capped(
    g: &Graph,
    cap: usize,
) -> Result<Option<ForbiddenWitness>> {
    if g.n() > cap {
        return Err(Error::TooLarge { n: g.n(), limit: cap });
    }
    let n = g.n();
    let deg3: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 3).collect();
    let deg2: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 2).collect();

    for (i, &a) in deg3.iter().enumerate() {
        for (j, &b) in deg3.iter().enumerate().skip(i + 1) {
            for (k, &c) in deg3.iter().enumerate().skip(j + 1) {
                for &d in deg3.iter().skip(k + 1) {
                    let branch = vec![a, b, c, d];
                    if let Some(w) = try_route(g, SubdivisionKind::K4, branch) {
                        return Ok(Some(w));
                    }
                }
            }
        }
    }
    for (i, &a) in deg3.iter().enumerate() {
        for &b in deg3.iter().skip(i + 1) {
            let leaves: Vec<usize> = deg2.iter().copied().filter(|&v| v != a && v != b).collect();
            for (p, &c) in leaves.iter().enumerate() {
                for (q, &d) in leaves.iter().enumerate().skip(p + 1) {
                    for &e in leaves.iter().skip(q + 1) {
                        let branch = vec![a, b, c, d, e];
                        if let Some(w) = try_route(g, SubdivisionKind::K23, branch) {
                            return Ok(Some(w));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

fn try_route(g: &Graph, kind: SubdivisionKind, branch: Vec<usize>) -> Option<ForbiddenWitness> {
    let pairs = ForbiddenWitness::required_pairs(kind, &branch);
    let used: VertexSet = branch.iter().copied().collect();
    let mut router = Router {
        g,
        pairs: &pairs,
        paths: Vec::new(),
    };
    router.route(0, used).then_some(ForbiddenWitness {
        kind,
        branch_vertices: branch,
        paths: router.paths,
    })
}

struct Router<'a> {
    g: &'a Graph,
    pairs: &'a [(usize, usize)],
    paths: Vec<Vec<usize>>,
}

impl Router<'_> {
    /// Routes pairs `i..` through vertices outside `used`.
    fn route(&mut self, i: usize, used: VertexSet) -> bool {
        if i == self.pairs.len() {
            return true;
        }
        let free = self.g.vertices() - used;
        for &(s, t) in &self.pairs[i..] {
            if !self.g.reach(s, free.with(s).with(t)).contains(t) {
                return false;
            }
        }
        let (s, t) = self.pairs[i];
        let mut path = vec![s];
        self.extend(i, used, free, &mut path, t)
    }

    fn extend(
        &mut self,
        i: usize,
        used: VertexSet,
        free: VertexSet,
        path: &mut Vec<usize>,
        t: usize,
    ) -> bool {
        let cur = *path.last().unwrap();
        if self.g.has_edge(cur, t) {
            path.push(t);
            self.paths.push(path.clone());
            let internal: VertexSet = path[1..path.len() - 1].iter().copied().collect();
            if self.route(i + 1, used | internal) {
                return true;
            }
            self.paths.pop();
            path.pop();
        }
        for next in self.g.neighbors(cur) & free {
            let remaining = free.without(next);
            if !self.g.reach(next, remaining.with(next).with(t)).contains(t) {
                continue;
            }
            path.push(next);
            if self.extend(i, used, remaining, path, t) {
                return true;
            }
            path.pop();
        }
        false
    }
}

/// Outcome of checking the bipartite outerplanar counting bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteBound {
    /// Outerplanar, `|X| >= 2`, and every vertex of `Y` has degree at least 2.
    pub hypothesis_met: bool,
    /// `|Y| <= 2|X| - 2`.
    pub bound_holds: bool,
    pub x_size: usize,
    pub y_size: usize,
}

pub fn check_bipartite_outerplanar_bound(
    g: &Graph,
    x: VertexSet,
    y: VertexSet,
) -> Result<BipartiteBound> {
    g.check_set(x)?;
    g.check_set(y)?;
    if x.intersects(y) || (x | y) != g.vertices() {
        return Err(Error::NotPartition);
    }
    for (u, v) in g.edges() {
        if x.contains(u) == x.contains(v) {
            return Err(Error::NotBipartite(u, v));
        }
    }
    let hypothesis_met =
        x.len() >= 2 && y.iter().all(|v| g.degree(v) >= 2) && is_outerplanar(g);
    let bound_holds = y.len() as i64 <= 2 * x.len() as i64 - 2;
    Ok(BipartiteBound {
        hypothesis_met,
        bound_holds,
        x_size: x.len(),
        y_size: y.len(),
    })
}
