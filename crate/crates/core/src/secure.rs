//! Domination, external private neighbors and the defense relation.
//!
//! A vertex `v` of a dominating set `S` defends an outside neighbor `u` if
//! swapping them keeps the set dominating. Two independent tests decide
//! this: [`defends_by_swap`] performs the swap, [`defends_by_epn`] checks
//! that `epn(v, S) ∪ {u, v}` is a clique.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    dominates(g, s)
}

#[inline]
pub(crate) fn dominates(g: &Graph, s: VertexSet) -> bool {
    g.closed_neighborhood_of(s) == g.vertices()
}

/// Outside vertices whose only neighbor in `s` is `v`.
pub fn epn(g: &Graph, v: usize, s: VertexSet) -> Result<VertexSet> {
    g.check_set(s)?;
    g.check_vertex(v)?;
    if !s.contains(v) {
        return Err(Error::NotInSet(v));
    }
    Ok(epn_unchecked(g, v, s))
}

#[inline]
pub(crate) fn epn_unchecked(g: &Graph, v: usize, s: VertexSet) -> VertexSet {
    let only_v = VertexSet::singleton(v);
    (g.neighbors(v) - s)
        .iter()
        .filter(|&u| g.neighbors(u) & s == only_v)
        .collect()
}

fn check_pair(g: &Graph, v: usize, u: usize, s: VertexSet) -> Result<()> {
    g.check_set(s)?;
    g.check_vertex(v)?;
    g.check_vertex(u)?;
    if !s.contains(v) {
        return Err(Error::NotInSet(v));
    }
    if s.contains(u) {
        return Err(Error::InSet(u));
    }
    Ok(())
}

/// True iff `uv` is an edge and `(s \ {v}) ∪ {u}` dominates `g`.
pub fn defends_by_swap(g: &Graph, v: usize, u: usize, s: VertexSet) -> Result<bool> {
    check_pair(g, v, u, s)?;
    Ok(swap_defends(g, v, u, s))
}

#[inline]
pub(crate) fn swap_defends(g: &Graph, v: usize, u: usize, s: VertexSet) -> bool {
    g.has_edge(u, v) && dominates(g, s.without(v).with(u))
}

/// True iff `uv` is an edge and `epn(v, s) ∪ {u, v}` induces a clique.
/// Non-adjacent pairs answer `false` before the domination precondition is
/// examined; otherwise a non-dominating `s` is an error.
pub fn defends_by_epn(g: &Graph, v: usize, u: usize, s: VertexSet) -> Result<bool> {
    check_pair(g, v, u, s)?;
    if !g.has_edge(u, v) {
        return Ok(false);
    }
    if !dominates(g, s) {
        return Err(Error::NotDominating);
    }
    Ok(epn_defends(g, v, u, s))
}

/// Assumes `s` dominates, `v ∈ s`, `u ∉ s`.
#[inline]
pub(crate) fn epn_defends(g: &Graph, v: usize, u: usize, s: VertexSet) -> bool {
    g.has_edge(u, v) && g.is_clique(epn_unchecked(g, v, s).with(u).with(v))
}

/// A secure dominating set with a defender for every outside vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SecureCertificate {
    #[serde(serialize_with = "serialize_set")]
    pub set: VertexSet,
    /// `(u, defender(u))` for every `u` outside the set, ordered by `u`.
    pub defenders: Vec<(usize, usize)>,
}

pub(crate) fn serialize_set<S: serde::Serializer>(
    s: &VertexSet,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_seq(s.iter())
}

impl SecureCertificate {
    pub fn defender(&self, u: usize) -> Option<usize> {
        self.defenders
            .binary_search_by_key(&u, |&(w, _)| w)
            .ok()
            .map(|i| self.defenders[i].1)
    }

    /// Re-checks both certificate conditions directly: the set dominates,
    /// and each listed swap is along an edge and keeps the set dominating.
    pub fn verify(&self, g: &Graph) -> bool {
        if g.check_set(self.set).is_err() {
            return false;
        }
        let outside: Vec<usize> = (g.vertices() - self.set).iter().collect();
        let listed: Vec<usize> = self.defenders.iter().map(|&(u, _)| u).collect();
        if outside != listed {
            return false;
        }
        let dominated = |set: VertexSet| {
            (0..g.n()).all(|w| set.contains(w) || g.neighbors(w).intersects(set))
        };
        dominated(self.set)
            && self.defenders.iter().all(|&(u, v)| {
                v < g.n()
                    && self.set.contains(v)
                    && g.has_edge(u, v)
                    && dominated(self.set.without(v).with(u))
            })
    }
}

/// Why a set fails to be secure dominating.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", content = "vertex", rename_all = "snake_case")]
pub enum SecureFailure {
    /// The smallest vertex with no neighbor in the set.
    Undominated(usize),
    /// The smallest outside vertex no neighbor in the set can defend.
    Undefended(usize),
}

/// Certificate with the smallest defender per outside vertex, or the first
/// failing vertex.
pub fn secure_check(g: &Graph, s: VertexSet) -> Result<std::result::Result<SecureCertificate, SecureFailure>> {
    g.check_set(s)?;
    let covered = g.closed_neighborhood_of(s);
    if let Some(u) = (g.vertices() - covered).first() {
        return Ok(Err(SecureFailure::Undominated(u)));
    }
    let mut defenders = Vec::with_capacity(g.n() - s.len());
    for u in g.vertices() - s {
        match (g.neighbors(u) & s).iter().find(|&v| epn_defends(g, v, u, s)) {
            Some(v) => defenders.push((u, v)),
            None => return Ok(Err(SecureFailure::Undefended(u))),
        }
    }
    Ok(Ok(SecureCertificate { set: s, defenders }))
}

pub fn is_secure_dominating(g: &Graph, s: VertexSet) -> Result<Option<SecureCertificate>> {
    Ok(secure_check(g, s)?.ok())
}

/// Same contract as [`is_secure_dominating`] but built on the swap test.
pub fn is_secure_dominating_by_swap(g: &Graph, s: VertexSet) -> Result<Option<SecureCertificate>> {
    g.check_set(s)?;
    if !dominates(g, s) {
        return Ok(None);
    }
    let mut defenders = Vec::new();
    for u in g.vertices() - s {
        match (g.neighbors(u) & s).iter().find(|&v| swap_defends(g, v, u, s)) {
            Some(v) => defenders.push((u, v)),
            None => return Ok(None),
        }
    }
    Ok(Some(SecureCertificate { set: s, defenders }))
}
