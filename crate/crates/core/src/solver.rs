//! Exact domination and secure domination numbers.
//!
//! Both solvers try target sizes in increasing order and, for each size,
//! walk the candidate sets of a connected component in lexicographic order.
//! A branch is cut as soon as some vertex is neither dominated by the
//! current picks nor coverable by any vertex still available. The first
//! set accepted is therefore the lexicographically smallest optimum, and
//! per-component optima are merged into the global one.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::outerplanar::is_outerplanar;
use crate::secure::{self, SecureCertificate};

/// Vertex cap for [`gamma_s_bruteforce`].
pub const BRUTEFORCE_MAX_VERTICES: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub value: usize,
    #[serde(serialize_with = "secure::serialize_set")]
    pub set: VertexSet,
    /// Present for secure domination.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<SecureCertificate>,
    pub nodes_explored: u64,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Target {
    Dominating,
    Secure,
}

/// Search tuning for [`gamma_s_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Start the size search at `⌈(n+4)/5⌉` on outerplanar components with
    /// at least four vertices. Sweeps that verify this very bound must turn
    /// it off, or a counterexample could never be observed.
    pub use_outerplanar_bound: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            use_outerplanar_bound: true,
        }
    }
}

/// Domination number with a lexicographically smallest minimum set.
pub fn gamma(g: &Graph) -> Result<SolveResult> {
    solve(g, Target::Dominating, false)
}

/// Secure domination number with a lexicographically smallest minimum set
/// and its certificate.
pub fn gamma_s(g: &Graph) -> Result<SolveResult> {
    gamma_s_with(g, SolveOptions::default())
}

pub fn gamma_s_with(g: &Graph, opts: SolveOptions) -> Result<SolveResult> {
    solve(g, Target::Secure, opts.use_outerplanar_bound)
}

/// `⌈(n + 4) / 5⌉`.
pub fn lower_bound(n: usize) -> usize {
    (n + 4).div_ceil(5)
}

fn solve(g: &Graph, target: Target, outerplanar_bound: bool) -> Result<SolveResult> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.n() > MAX_VERTICES {
        return Err(Error::TooLarge {
            n: g.n(),
            limit: MAX_VERTICES,
        });
    }
    let mut set = VertexSet::EMPTY;
    let mut nodes = 0u64;
    for comp in g.connected_components() {
        let (part, explored) = solve_component(g, comp, target, outerplanar_bound);
        set |= part;
        nodes += explored;
    }
    let certificate = match target {
        Target::Dominating => None,
        Target::Secure => Some(
            secure::is_secure_dominating(g, set)?
                .expect("component-wise secure sets combine into a secure set"),
        ),
    };
    Ok(SolveResult {
        value: set.len(),
        set,
        certificate,
        nodes_explored: nodes,
    })
}

fn solve_component(
    g: &Graph,
    comp: VertexSet,
    target: Target,
    outerplanar_bound: bool,
) -> (VertexSet, u64) {
    let order: Vec<usize> = comp.to_vec();
    let n = order.len();
    let delta = order.iter().map(|&v| g.degree(v)).max().unwrap_or(0);
    let mut lo = n.div_ceil(delta + 1);
    if outerplanar_bound && n >= 4 {
        let (sub, _) = g.induced_subgraph(comp).expect("component in range");
        if is_outerplanar(&sub) {
            lo = lo.max(lower_bound(n));
        }
    }
    // suffix_cover[i] = vertices dominated by some order[j], j >= i
    let mut suffix_cover = vec![VertexSet::EMPTY; n + 1];
    for i in (0..n).rev() {
        suffix_cover[i] = suffix_cover[i + 1] | g.closed_neighbors(order[i]);
    }
    let mut search = SizeSearch {
        g,
        comp,
        order: &order,
        suffix_cover: &suffix_cover,
        target,
        nodes: 0,
    };
    for k in lo.max(1)..=n {
        if let Some(found) = search.run(k) {
            return (found, search.nodes);
        }
    }
    unreachable!("the whole component is a secure dominating set of itself")
}

struct SizeSearch<'a> {
    g: &'a Graph,
    comp: VertexSet,
    order: &'a [usize],
    suffix_cover: &'a [VertexSet],
    target: Target,
    nodes: u64,
}

impl SizeSearch<'_> {
    fn run(&mut self, k: usize) -> Option<VertexSet> {
        self.descend(k, 0, VertexSet::EMPTY, VertexSet::EMPTY)
    }

    fn descend(
        &mut self,
        left: usize,
        start: usize,
        chosen: VertexSet,
        covered: VertexSet,
    ) -> Option<VertexSet> {
        self.nodes += 1;
        let undominated = self.comp - covered;
        if left == 0 {
            return (undominated.is_empty() && self.accept(chosen)).then_some(chosen);
        }
        if !undominated.is_subset(self.suffix_cover[start]) {
            return None;
        }
        let n = self.order.len();
        for i in start..=n - left {
            let v = self.order[i];
            let found = self.descend(
                left - 1,
                i + 1,
                chosen.with(v),
                covered | self.g.closed_neighbors(v),
            );
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn accept(&self, s: VertexSet) -> bool {
        match self.target {
            Target::Dominating => true,
            Target::Secure => (self.comp - s).iter().all(|u| {
                (self.g.neighbors(u) & s)
                    .iter()
                    .any(|v| secure::epn_defends(self.g, v, u, s))
            }),
        }
    }
}

/// Reference solver: scans every subset in order of size, then
/// lexicographically, and tests security with the swap definition only.
pub fn gamma_s_bruteforce(g: &Graph) -> Result<SolveResult> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > BRUTEFORCE_MAX_VERTICES {
        return Err(Error::TooLarge {
            n,
            limit: BRUTEFORCE_MAX_VERTICES,
        });
    }
    let mut nodes = 0u64;
    for k in 0..=n {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            nodes += 1;
            let s: VertexSet = idx.iter().copied().collect();
            if let Some(cert) = secure::is_secure_dominating_by_swap(g, s)? {
                return Ok(SolveResult {
                    value: k,
                    set: s,
                    certificate: Some(cert),
                    nodes_explored: nodes,
                });
            }
            // next k-combination of 0..n in lexicographic order
            let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
                break;
            };
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    unreachable!("V(G) is secure dominating")
}
