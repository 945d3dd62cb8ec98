//! Finite simple graphs over named vertices, and the graph-theoretic
//! predicates and decompositions used throughout the crate.
//!
//! Vertices are identified by their declaration index; subsets of vertices
//! are bitmasks ([`VertexSet`]). All deterministic outputs are ordered by
//! declaration order.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A set of vertices of a [`SimpleGraph`], as a bitmask over declaration
/// indices. Graphs are capped at 64 vertices.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn single(v: usize) -> VertexSet {
        VertexSet(1u64 << v)
    }

    pub fn full(n: usize) -> VertexSet {
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 & (1u64 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: usize) -> VertexSet {
        VertexSet(self.0 | (1u64 << v))
    }

    pub fn without(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: VertexSet) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest vertex index in the set; panics on the empty set.
    pub fn min_vertex(self) -> usize {
        debug_assert!(!self.is_empty());
        self.0.trailing_zeros() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// All subsets of `self`, the empty set first, `self` last.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let mask = self.0;
        let mut cur: u64 = 0;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = VertexSet(cur);
            if cur == mask {
                done = true;
            } else {
                cur = (cur.wrapping_sub(mask)) & mask;
            }
            Some(out)
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A finite simple graph with named vertices.
///
/// No loops, no multi-edges; vertex order is fixed at construction and is
/// used for all deterministic tie-breaking.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    names: Vec<String>,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph({:?}, edges={:?})", self.names, self.edges())
    }
}

impl SimpleGraph {
    /// Builds a graph from vertex names and edges given as name pairs.
    pub fn new<S: AsRef<str>>(names: &[S], edges: &[(S, S)]) -> Result<SimpleGraph> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_owned()).collect();
        if names.len() > 64 {
            return Err(Error::InvalidGraph(format!(
                "at most 64 vertices are supported, got {}",
                names.len()
            )));
        }
        let mut index = BTreeMap::new();
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex `{n}`")));
            }
        }
        let mut adj = vec![VertexSet::EMPTY; names.len()];
        for (a, b) in edges {
            let a = a.as_ref();
            let b = b.as_ref();
            let i = *index
                .get(a)
                .ok_or_else(|| Error::UnknownVertex(a.to_owned()))?;
            let j = *index
                .get(b)
                .ok_or_else(|| Error::UnknownVertex(b.to_owned()))?;
            if i == j {
                return Err(Error::InvalidGraph(format!("loop edge at `{a}`")));
            }
            adj[i].insert(j);
            adj[j].insert(i);
        }
        Ok(SimpleGraph { names, adj })
    }

    /// Builds a graph on `n` vertices named `0..n-1` from index edges.
    pub fn from_index_edges(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let named: Vec<(String, String)> = edges
            .iter()
            .map(|&(a, b)| (a.to_string(), b.to_string()))
            .collect();
        SimpleGraph::new(&names, &named).expect("index edges in range")
    }

    /// The cycle on `n` vertices named `0..n-1`.
    pub fn cycle(n: usize) -> SimpleGraph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::from_index_edges(n, &edges)
    }

    /// The path `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> SimpleGraph {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        SimpleGraph::from_index_edges(n, &edges)
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> SimpleGraph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        SimpleGraph::from_index_edges(n, &edges)
    }

    /// The edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> SimpleGraph {
        SimpleGraph::from_index_edges(n, &[])
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.names.len())
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_owned()))
    }

    /// Names of the vertices in `set`, in declaration order.
    pub fn set_names(&self, set: VertexSet) -> Vec<String> {
        set.iter().map(|v| self.names[v].clone()).collect()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.names.len() {
            for j in self.adj[i].iter() {
                if i < j {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// The link `lk(v)`: all neighbors of `v`.
    pub fn link(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// The star `star(v) = {v} ∪ lk(v)`.
    pub fn star(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// The orthogonal `Λ⊥`: all vertices outside `lambda` joined to every
    /// vertex of `lambda`. For a singleton this is the link.
    pub fn orthogonal(&self, lambda: VertexSet) -> VertexSet {
        let mut out = self.vertices().difference(lambda);
        for v in lambda.iter() {
            out = out.intersection(self.adj[v]);
        }
        out
    }

    /// True when no two distinct vertices `v, w` satisfy `lk(v) ⊆ star(w)`.
    pub fn is_transvection_free(&self) -> bool {
        let n = self.names.len();
        for v in 0..n {
            for w in 0..n {
                if v != w && self.link(v).is_subset(self.star(w)) {
                    return false;
                }
            }
        }
        true
    }

    /// True when some vertex `v` disconnects the graph after removing
    /// `star(v)`. The empty graph counts as connected.
    pub fn has_partial_conjugation(&self) -> bool {
        (0..self.names.len())
            .any(|v| !self.is_connected_within(self.vertices().difference(self.star(v))))
    }

    /// All untransvectable vertices: `v` such that no `w ≠ v` has
    /// `lk(v) ⊆ star(w)`.
    pub fn untransvectable_vertices(&self) -> VertexSet {
        let n = self.names.len();
        (0..n)
            .filter(|&v| !(0..n).any(|w| w != v && self.link(v).is_subset(self.star(w))))
            .collect()
    }

    /// True when no two distinct vertices have equal stars.
    pub fn is_clique_reduced(&self) -> bool {
        let n = self.names.len();
        for v in 0..n {
            for w in v + 1..n {
                if self.star(v) == self.star(w) {
                    return false;
                }
            }
        }
        true
    }

    /// True when all vertices of `lambda` have the same link outside of
    /// `lambda`. Such a subgraph can be collapsed to a single vertex
    /// without changing the class of groups presented by the graph.
    pub fn is_collapsible(&self, lambda: VertexSet) -> bool {
        let outside = self.vertices().difference(lambda);
        let mut common: Option<VertexSet> = None;
        for v in lambda.iter() {
            let outer = self.adj[v].intersection(outside);
            match common {
                None => common = Some(outer),
                Some(c) if c != outer => return false,
                Some(_) => {}
            }
        }
        true
    }

    /// True when the graph contains no proper collapsible induced subgraph
    /// on at least two vertices. Scans all `2^n` subsets.
    pub fn is_strongly_reduced(&self) -> bool {
        let all = self.vertices();
        for lambda in all.subsets() {
            if lambda.len() >= 2 && lambda != all && self.is_collapsible(lambda) {
                return false;
            }
        }
        true
    }

    /// The maximal join decomposition `Γ = Γ_1 ∘ … ∘ Γ_k` into irreducible
    /// factors: connected components of the complement graph, sorted by
    /// smallest vertex. Errors on the empty graph.
    pub fn join_decompose(&self) -> Result<Vec<VertexSet>> {
        if self.names.is_empty() {
            return Err(Error::InvalidInput(
                "join decomposition of the empty graph".to_owned(),
            ));
        }
        Ok(self.join_factors_within(self.vertices()))
    }

    /// Connected components of the subgraph induced on `within`, sorted by
    /// smallest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut remaining = within;
        let mut out = Vec::new();
        while !remaining.is_empty() {
            let seed = remaining.min_vertex();
            let mut comp = VertexSet::single(seed);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.adj[v].intersection(within).difference(comp));
                }
                comp = comp.union(next);
                frontier = next;
            }
            out.push(comp);
            remaining = remaining.difference(comp);
        }
        out
    }

    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        self.components_within(within).len() <= 1
    }

    /// Join factors of the subgraph induced on `within`: connected
    /// components of the induced complement graph, sorted by smallest
    /// vertex.
    pub fn join_factors_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut remaining = within;
        let mut out = Vec::new();
        while !remaining.is_empty() {
            let seed = remaining.min_vertex();
            let mut comp = VertexSet::single(seed);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    let non_nbrs = within.difference(self.adj[v]).without(v);
                    next = next.union(non_nbrs.difference(comp));
                }
                comp = comp.union(next);
                frontier = next;
            }
            out.push(comp);
            remaining = remaining.difference(comp);
        }
        out.sort();
        out
    }

    /// True when the subgraph induced on `within` is a nontrivial join,
    /// i.e. decomposes as `A ∘ B` with both parts nonempty.
    pub fn is_join_within(&self, within: VertexSet) -> bool {
        within.len() >= 2 && self.join_factors_within(within).len() >= 2
    }

    /// True when `set` spans a complete subgraph (the empty set and
    /// singletons count).
    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.without(v).is_subset(self.adj[v]))
    }

    /// The clique factor of the subgraph induced on `set`: vertices of
    /// `set` joined to every other vertex of `set`.
    pub fn clique_factor_within(&self, set: VertexSet) -> VertexSet {
        set.iter()
            .filter(|&v| set.without(v).is_subset(self.adj[v]))
            .collect()
    }

    /// All inclusion-maximal subsets of `within` spanning a nontrivial
    /// join, sorted. These are the types of the maximal product parabolic
    /// subgroups of the standard parabolic on `within`.
    pub fn maximal_join_subsets(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut joins: Vec<VertexSet> = within
            .subsets()
            .filter(|&s| self.is_join_within(s))
            .collect();
        joins.sort_by_key(|s| std::cmp::Reverse(s.len()));
        let mut maximal: Vec<VertexSet> = Vec::new();
        for s in joins {
            if !maximal.iter().any(|&m| s.is_proper_subset(m)) {
                maximal.push(s);
            }
        }
        maximal.sort();
        maximal
    }

    /// True when `set` is a connected component of the subgraph induced on
    /// `within` and spans a clique.
    pub fn is_isolated_clique_within(&self, within: VertexSet, set: VertexSet) -> bool {
        self.is_clique(set) && self.components_within(within).contains(&set)
    }

    /// All cliques of the graph, the empty clique included, sorted.
    pub fn cliques(&self) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::EMPTY];
        let mut frontier = vec![VertexSet::EMPTY];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &c in &frontier {
                let start = if c.is_empty() { 0 } else { 63 - c.0.leading_zeros() as usize + 1 };
                for v in start..self.names.len() {
                    if c.is_subset(self.adj[v]) {
                        next.push(c.with(v));
                    }
                }
            }
            out.extend_from_slice(&next);
            frontier = next;
        }
        out.sort();
        out
    }

    /// The standalone graph induced on `set`, preserving names and
    /// relative order.
    pub fn induced(&self, set: VertexSet) -> SimpleGraph {
        let verts: Vec<usize> = set.iter().collect();
        let names: Vec<String> = verts.iter().map(|&v| self.names[v].clone()).collect();
        let mut adj = vec![VertexSet::EMPTY; verts.len()];
        for (i, &v) in verts.iter().enumerate() {
            for (j, &w) in verts.iter().enumerate() {
                if self.adjacent(v, w) {
                    adj[i].insert(j);
                }
            }
        }
        SimpleGraph { names, adj }
    }
}
