//! Brute-force references shared by the integration tests. Nothing here
//! calls the library's canonical labeling, enumerator or solver.

#![allow(dead_code)]

use std::collections::HashMap;

use secdom::{Graph, VertexSet};

/// Adjacency as plain bitmasks.
pub fn rows(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbors(v).bits()).collect()
}

fn sorted_degrees(adj: &[u64]) -> Vec<u32> {
    let mut d: Vec<u32> = adj.iter().map(|r| r.count_ones()).collect();
    d.sort_unstable();
    d
}

type Invariant = Vec<(u32, Vec<u32>)>;

/// Sorted multiset of (degree, sorted neighbor degrees), an isomorphism
/// invariant used only to bucket candidates.
fn invariant(adj: &[u64]) -> Invariant {
    let deg: Vec<u32> = adj.iter().map(|r| r.count_ones()).collect();
    let mut out: Invariant = adj
        .iter()
        .enumerate()
        .map(|(v, &r)| {
            let mut nd: Vec<u32> = (0..adj.len()).filter(|&u| r >> u & 1 == 1).map(|u| deg[u]).collect();
            nd.sort_unstable();
            (deg[v], nd)
        })
        .collect();
    out.sort();
    out
}

/// Isomorphism by backtracking over vertex maps that respect degrees.
pub fn isomorphic_rows(a: &[u64], b: &[u64]) -> bool {
    let n = a.len();
    if n != b.len() || sorted_degrees(a) != sorted_degrees(b) {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    extend_map(a, b, 0, &mut map, &mut used)
}

fn extend_map(a: &[u64], b: &[u64], v: usize, map: &mut [usize], used: &mut u64) -> bool {
    let n = a.len();
    if v == n {
        return true;
    }
    for t in 0..n {
        if *used >> t & 1 == 1 || a[v].count_ones() != b[t].count_ones() {
            continue;
        }
        let consistent = (0..v).all(|u| (a[v] >> u & 1) == (b[t] >> map[u] & 1));
        if !consistent {
            continue;
        }
        map[v] = t;
        *used |= 1 << t;
        if extend_map(a, b, v + 1, map, used) {
            return true;
        }
        *used &= !(1 << t);
    }
    map[v] = usize::MAX;
    false
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    isomorphic_rows(&rows(a), &rows(b))
}

fn connected_rows(adj: &[u64]) -> bool {
    let n = adj.len();
    if n == 0 {
        return false;
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0;
        for (v, row) in adj.iter().enumerate() {
            if frontier >> v & 1 == 1 {
                next |= row;
            }
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == full
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, found by scanning every labeled graph whose degrees are
/// non-increasing in the label and rejecting those isomorphic to a class
/// already kept.
pub fn brute_connected_classes(n: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&n));
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut buckets: HashMap<Invariant, Vec<Vec<u64>>> = HashMap::new();
    let mut order: Vec<Vec<u64>> = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let mut adj = vec![0u64; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        if adj.windows(2).any(|w| w[0].count_ones() < w[1].count_ones()) {
            continue;
        }
        if !connected_rows(&adj) {
            continue;
        }
        let key = invariant(&adj);
        let bucket = buckets.entry(key).or_default();
        if bucket.iter().any(|r| isomorphic_rows(r, &adj)) {
            continue;
        }
        bucket.push(adj.clone());
        order.push(adj);
    }
    order
        .into_iter()
        .map(|adj| {
            let edges = (0..n).flat_map(|u| {
                let r = adj[u];
                (u + 1..n).filter(move |&v| r >> v & 1 == 1).map(move |v| (u, v))
            });
            Graph::new(n, edges).unwrap()
        })
        .collect()
}

/// Whether `(S \ {v}) ∪ {u}` dominates, checked vertex by vertex.
pub fn swap_ok(g: &Graph, s: u64, v: usize, u: usize) -> bool {
    let t = (s & !(1 << v)) | 1 << u;
    dominates(g, t)
}

pub fn dominates(g: &Graph, s: u64) -> bool {
    (0..g.n()).all(|w| s >> w & 1 == 1 || g.neighbors(w).bits() & s != 0)
}

pub fn secure_by_definition(g: &Graph, s: u64) -> bool {
    dominates(g, s)
        && (0..g.n())
            .filter(|&u| s >> u & 1 == 0)
            .all(|u| (0..g.n()).any(|v| s >> v & 1 == 1 && g.has_edge(u, v) && swap_ok(g, s, v, u)))
}

/// Minimum secure dominating set size over all `2^n` subsets.
pub fn gamma_s_by_subsets(g: &Graph) -> usize {
    assert!(g.n() <= 20);
    (0u64..1 << g.n())
        .filter(|&s| secure_by_definition(g, s))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

pub fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}
