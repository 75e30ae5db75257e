//! Isomorphism-free generation of connected graphs by canonical augmentation.
//!
//! Every connected graph on `n` vertices is produced from a connected parent
//! on `n - 1` vertices by adding a vertex adjacent to a non-empty subset.
//! A child `X` obtained by adding `v` is kept only if `X - v` is isomorphic
//! to `X - c`, where `c` is the canonical deletion vertex of `X`: among the
//! non-cut vertices with the largest `(degree, neighbor degree sum)`, the
//! one placed last by the canonical labeling. Since the parent level is
//! isomorphism-free, only siblings from the same parent can collide, and
//! those are removed by comparing canonical forms.
//!
//! The outerplanar stream runs the same construction over outerplanar
//! parents only. Outerplanarity is inherited by vertex deletion, so every
//! canonical parent of an outerplanar graph is itself in that stream.

use std::collections::HashSet;
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::graph::{canonical_form, canonical_labeling, CanonicalForm, Graph, VertexSet};
use crate::outerplanar::is_outerplanar;

/// Largest order the generator accepts.
pub const MAX_ENUMERATION_N: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Connected,
    Outerplanar,
}

impl Family {
    fn admits(self, g: &Graph) -> bool {
        match self {
            Family::Connected => true,
            Family::Outerplanar => {
                let n = g.n();
                (n < 2 || g.m() <= 2 * n - 3) && is_outerplanar(g)
            }
        }
    }
}

/// A generated graph with its canonical form.
#[derive(Clone, Debug)]
pub struct Generated {
    pub graph: Graph,
    pub form: CanonicalForm,
}

/// Streams one level of the generation tree. Holds the parent level in
/// memory and nothing else beyond the current parent's sibling forms.
pub struct Generation {
    family: Family,
    n: usize,
    parents: Rc<Vec<Generated>>,
    parent: usize,
    mask: u64,
    siblings: HashSet<CanonicalForm>,
    candidates: u64,
    emitted_root: bool,
}

impl Generation {
    /// Child extensions examined so far.
    pub fn candidates(&self) -> u64 {
        self.candidates
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn try_child(&mut self, neighbors: VertexSet) -> Option<Generated> {
        self.candidates += 1;
        let parent = &self.parents[self.parent];
        let x = parent.graph.with_new_vertex(neighbors);
        let v = x.n() - 1;
        if !self.family.admits(&x) {
            return None;
        }
        let score = |u: usize| {
            let nsum: usize = x.neighbors(u).iter().map(|w| x.degree(w)).sum();
            (x.degree(u), nsum)
        };
        let best = x
            .vertices()
            .iter()
            .filter(|&u| !x.is_cut_vertex(u))
            .map(score)
            .max()
            .expect("a connected graph has a non-cut vertex");
        if score(v) != best {
            return None;
        }
        let ties: VertexSet = x
            .vertices()
            .iter()
            .filter(|&u| score(u) == best && !x.is_cut_vertex(u))
            .collect();
        let form = if ties == VertexSet::singleton(v) {
            canonical_form(&x).expect("within canonical tier")
        } else {
            let lab = canonical_labeling(&x).expect("within canonical tier");
            let pos = lab.positions();
            let c = ties.iter().max_by_key(|&u| pos[u]).unwrap();
            if c != v {
                let reduced = canonical_form(&x.without_vertex(c)).expect("within canonical tier");
                if reduced != parent.form {
                    return None;
                }
            }
            lab.form
        };
        if !self.siblings.insert(form.clone()) {
            return None;
        }
        Some(Generated { graph: x, form })
    }
}

impl Iterator for Generation {
    type Item = Generated;

    fn next(&mut self) -> Option<Generated> {
        if self.n == 1 {
            if self.emitted_root {
                return None;
            }
            self.emitted_root = true;
            self.candidates += 1;
            let graph = Graph::empty(1);
            let form = canonical_form(&graph).unwrap();
            return Some(Generated { graph, form });
        }
        let limit = 1u64 << (self.n - 1);
        loop {
            if self.parent >= self.parents.len() {
                return None;
            }
            if self.mask >= limit {
                self.parent += 1;
                self.mask = 1;
                self.siblings.clear();
                continue;
            }
            let neighbors = VertexSet::from_bits(self.mask);
            self.mask += 1;
            if let Some(child) = self.try_child(neighbors) {
                return Some(child);
            }
        }
    }
}

fn check_n(n: usize) -> Result<()> {
    if (1..=MAX_ENUMERATION_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            what: "enumeration order",
            got: n,
            min: 1,
            max: MAX_ENUMERATION_N,
        })
    }
}

/// Level-by-level generator that keeps the most recent complete level.
pub struct Levels {
    family: Family,
    current: Rc<Vec<Generated>>,
    n: usize,
}

impl Levels {
    pub fn new(family: Family) -> Self {
        Levels {
            family,
            current: Rc::new(Vec::new()),
            n: 0,
        }
    }

    /// Order of the next level to be generated.
    pub fn next_n(&self) -> usize {
        self.n + 1
    }

    /// Streams the next level. Drive it with [`Levels::absorb`] to keep it
    /// as the parent level, or drop it if no further level is needed.
    pub fn stream_next(&self) -> Result<Generation> {
        let n = self.n + 1;
        check_n(n)?;
        Ok(Generation {
            family: self.family,
            n,
            parents: Rc::clone(&self.current),
            parent: 0,
            mask: 1,
            siblings: HashSet::new(),
            candidates: 0,
            emitted_root: false,
        })
    }

    /// Installs a fully generated level as the new parent level.
    pub fn absorb(&mut self, n: usize, level: Vec<Generated>) {
        assert_eq!(n, self.n + 1, "levels must be absorbed in order");
        self.current = Rc::new(level);
        self.n = n;
    }

    /// Generates levels until the one just below `n` is the parent level.
    pub fn advance_to(&mut self, n: usize) -> Result<()> {
        check_n(n)?;
        while self.n + 1 < n {
            let next = self.n + 1;
            let level: Vec<Generated> = self.stream_next()?.collect();
            self.absorb(next, level);
        }
        Ok(())
    }
}

fn stream(family: Family, n: usize) -> Result<Generation> {
    check_n(n)?;
    let mut levels = Levels::new(family);
    levels.advance_to(n)?;
    levels.stream_next()
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, `1 <= n <= 10`.
pub fn enumerate_connected(n: usize) -> Result<impl Iterator<Item = Graph>> {
    Ok(stream(Family::Connected, n)?.map(|g| g.graph))
}

/// The connected outerplanar graphs on `n` vertices, one per class.
pub fn enumerate_outerplanar(n: usize) -> Result<impl Iterator<Item = Graph>> {
    Ok(stream(Family::Outerplanar, n)?.map(|g| g.graph))
}
