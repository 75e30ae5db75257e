//! Small simple undirected graphs with one-word bitset adjacency rows.
//!
//! Every graph in this crate lives on the vertex universe `0..n` with
//! `n <= 64`. Larger graphs can still be read and written through
//! [`EdgeList`], which is what the parsers return before conversion.

mod canon;
mod io;
mod set;

pub use canon::{canonical_form, canonical_labeling, CanonicalForm, Labeling};
pub use io::{EdgeList, GRAPH6_HEADER};
pub use set::VertexSet;

use crate::error::{Error, Result};

/// Largest vertex count supported by the bitset representation.
pub const MAX_VERTICES: usize = 64;

/// An immutable simple undirected graph on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                n,
                limit: MAX_VERTICES,
            });
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        Graph {
            adj: vec![VertexSet::EMPTY; n],
        }
    }

    pub fn complete(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        let full = VertexSet::full(n);
        Graph {
            adj: (0..n).map(|v| full.without(v)).collect(),
        }
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path fits")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle fits")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Open neighborhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.len()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|r| r.len()).min().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, row)| {
            row.iter().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    /// Union of closed neighborhoods of `s`.
    #[inline]
    pub fn closed_neighborhood_of(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(s, |acc, v| acc | self.adj[v])
    }

    /// Fails unless `s` is a subset of `0..n`.
    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        let outside = s - self.vertices();
        match outside.first() {
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n() }),
            None => Ok(()),
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// The subgraph induced by `s`. Vertices are renumbered in increasing
    /// order; the returned map sends new indices to original vertices.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(s)?;
        let map = s.to_vec();
        let mut inverse = [usize::MAX; MAX_VERTICES];
        for (i, &v) in map.iter().enumerate() {
            inverse[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| (self.adj[v] & s).iter().map(|u| inverse[u]).collect())
            .collect();
        Ok((Graph { adj }, map))
    }

    /// True iff every two vertices of `s` are adjacent (vacuous for `|s| <= 1`).
    pub fn is_complete_on(&self, s: VertexSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(self.is_clique(s))
    }

    #[inline]
    pub(crate) fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s - self.adj[v]) == VertexSet::singleton(v))
    }

    /// Vertices reachable from `start` inside `within` (which must contain `start`).
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = next & within & !seen;
            seen |= frontier;
        }
        seen
    }

    /// Connected components, ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub(crate) fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut parts = Vec::new();
        while let Some(v) = rest.first() {
            let part = self.reach(v, within);
            parts.push(part);
            rest -= part;
        }
        parts
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        match self.vertices().first() {
            None => true,
            Some(v) => self.reach(v, self.vertices()) == self.vertices(),
        }
    }

    /// Whether deleting `v` splits the component containing it.
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        let within = self.reach(v, self.vertices()).without(v);
        match within.first() {
            None => false,
            Some(u) => self.reach(u, within) != within,
        }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut adj = vec![VertexSet::EMPTY; self.n()];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph { adj }
    }

    #[must_use]
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        assert!(u != v && u < self.n() && v < self.n());
        let mut adj = self.adj.clone();
        adj[u].insert(v);
        adj[v].insert(u);
        Graph { adj }
    }

    #[must_use]
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj[u].remove(v);
        adj[v].remove(u);
        Graph { adj }
    }

    /// Deletes `v`; vertices above it shift down by one.
    #[must_use]
    pub fn without_vertex(&self, v: usize) -> Graph {
        let keep = self.vertices().without(v);
        self.induced_subgraph(keep).expect("in range").0
    }

    /// Appends a new vertex `n` adjacent to `neighbors`.
    #[must_use]
    pub fn with_new_vertex(&self, neighbors: VertexSet) -> Graph {
        let n = self.n();
        assert!(n < MAX_VERTICES && neighbors.is_subset(self.vertices()));
        let mut adj = self.adj.clone();
        for u in neighbors {
            adj[u].insert(n);
        }
        adj.push(neighbors);
        Graph { adj }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n() + other.n();
        let shift = self.n();
        Graph::new(
            n,
            self.edges()
                .chain(other.edges().map(|(u, v)| (u + shift, v + shift))),
        )
    }

    /// Two-colours the graph; `None` if some edge is monochromatic.
    /// Each component's smallest vertex goes on the first side.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut side_a = VertexSet::EMPTY;
        let mut side_b = VertexSet::EMPTY;
        for comp in self.connected_components() {
            let start = comp.first().expect("non-empty component");
            let mut a = VertexSet::singleton(start);
            let mut b = VertexSet::EMPTY;
            let mut frontier = a;
            let mut on_a = true;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next |= self.adj[v];
                }
                next -= a | b;
                if on_a {
                    b |= next;
                } else {
                    a |= next;
                }
                on_a = !on_a;
                frontier = next;
            }
            side_a |= a;
            side_b |= b;
        }
        let ok = side_a.iter().all(|v| !self.adj[v].intersects(side_a))
            && side_b.iter().all(|v| !self.adj[v].intersects(side_b));
        ok.then_some((side_a, side_b))
    }

    pub fn to_edge_list(&self) -> EdgeList {
        EdgeList {
            n: self.n(),
            edges: self.edges().collect(),
        }
    }

    pub fn to_graph6(&self) -> String {
        self.to_edge_list().to_graph6()
    }

    pub fn from_graph6(s: &str) -> Result<Graph> {
        EdgeList::from_graph6(s)?.to_graph()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}
