//! Random test instances.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, VertexSet};

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("n within tier")
}

/// A maximal outerplanar graph: a polygon triangulated by recursively
/// cutting off a random triangle on one side, then randomly relabeled.
pub fn random_maximal_outerplanar<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    if n < 3 {
        edges.clear();
        if n == 2 {
            edges.push((0, 1));
        }
    }
    let mut stack = vec![(0..n).collect::<Vec<usize>>()];
    while let Some(poly) = stack.pop() {
        if poly.len() < 4 {
            continue;
        }
        let last = poly.len() - 1;
        let apex = rng.gen_range(1..last);
        if apex > 1 {
            edges.push((poly[0], poly[apex]));
        }
        if apex < last - 1 {
            edges.push((poly[apex], poly[last]));
        }
        stack.push(poly[..=apex].to_vec());
        stack.push(poly[apex..].to_vec());
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::new(n, edges.into_iter().map(|(u, v)| (perm[u], perm[v]))).expect("n within tier")
}

/// A connected outerplanar graph: a random maximal outerplanar graph with
/// each edge deleted independently with probability `delete_p`,
/// resampled until connected.
pub fn random_connected_outerplanar<R: Rng + ?Sized>(rng: &mut R, n: usize, delete_p: f64) -> Graph {
    loop {
        let base = random_maximal_outerplanar(rng, n);
        let kept: Vec<(usize, usize)> = base.edges().filter(|_| !rng.gen_bool(delete_p)).collect();
        let g = Graph::new(n, kept).expect("n within tier");
        if g.is_connected() {
            return g;
        }
    }
}

/// A uniformly random subset of `0..n` grown by random vertices until it
/// dominates `g`.
pub fn random_dominating_set<R: Rng + ?Sized>(rng: &mut R, g: &Graph) -> VertexSet {
    let n = g.n();
    let mut s: VertexSet = (0..n).filter(|_| rng.gen_bool(0.3)).collect();
    loop {
        let missing = g.vertices() - g.closed_neighborhood_of(s);
        if missing.is_empty() {
            return s;
        }
        let pool: Vec<usize> = (g.vertices() - s).to_vec();
        s.insert(*pool.choose(rng).unwrap());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::outerplanar::is_outerplanar;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn maximal_outerplanar_has_2n_minus_3_edges() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 3..=20 {
            let g = random_maximal_outerplanar(&mut rng, n);
            assert_eq!(g.m(), 2 * n - 3, "n = {n}");
            assert!(is_outerplanar(&g));
        }
    }

    #[test]
    fn connected_outerplanar_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let g = random_connected_outerplanar(&mut rng, 11, 0.3);
            assert!(g.is_connected() && is_outerplanar(&g));
        }
    }

    #[test]
    fn dominating_sets_dominate() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let g = random_graph(&mut rng, 10, 0.3);
            let s = random_dominating_set(&mut rng, &g);
            assert!(crate::secure::is_dominating(&g, s));
        }
    }
}
