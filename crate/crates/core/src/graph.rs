//! Simple undirected graphs with stable vertex identities.
//!
//! Vertices are identified by arbitrary `usize` ids that survive deletions, so
//! solutions computed on a reduced graph can always be reported against the
//! original instance. Graphs are plain values: editing operations clone.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// An unordered pair of distinct vertices, stored with the smaller id first.
///
/// Used both for existing edges and for candidate additions.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    a: usize,
    b: usize,
}

impl Edge {
    /// Creates the pair `{u, v}`. Panics if `u == v`; loops are rejected at
    /// the parsing and construction boundaries before this point.
    pub fn new(u: usize, v: usize) -> Self {
        assert!(u != v, "edge endpoints must be distinct: {u}");
        if u < v {
            Edge { a: u, b: v }
        } else {
            Edge { a: v, b: u }
        }
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    pub fn touches(&self, v: usize) -> bool {
        self.a == v || self.b == v
    }

    /// The endpoint other than `v`, if `v` is an endpoint.
    pub fn other(&self, v: usize) -> Option<usize> {
        if self.a == v {
            Some(self.b)
        } else if self.b == v {
            Some(self.a)
        } else {
            None
        }
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// A finite simple undirected graph: no loops, no parallel edges.
///
/// Adjacency is kept symmetric and sorted; the vertex set is exactly the key
/// set of the adjacency map.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Graph {
    adj: BTreeMap<usize, BTreeSet<usize>>,
}

impl Graph {
    pub fn new() -> Self {
        Graph::default()
    }

    /// A graph on vertices `1..=n` with no edges.
    pub fn with_vertices(n: usize) -> Self {
        let mut g = Graph::new();
        for v in 1..=n {
            g.add_vertex(v);
        }
        g
    }

    /// Builds a graph on vertices `1..=n` from an edge list. Panics on loops,
    /// duplicates, or out-of-range endpoints; intended for trusted callers.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::with_vertices(n);
        for &(u, v) in edges {
            assert!(g.add_edge(u, v), "duplicate edge {u}-{v}");
        }
        g
    }

    /// The complete graph on vertices `1..=n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::with_vertices(n);
        for u in 1..=n {
            for v in (u + 1)..=n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// The path `1-2-...-n`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::with_vertices(n);
        for v in 1..n {
            g.add_edge(v, v + 1);
        }
        g
    }

    /// The cycle on vertices `1..=n` (`n >= 3`).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(n, 1);
        g
    }

    /// The star with the given number of leaves: center 1, leaves 2..=k+1.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::with_vertices(leaves + 1);
        for v in 2..=leaves + 1 {
            g.add_edge(1, v);
        }
        g
    }

    pub fn add_vertex(&mut self, v: usize) -> bool {
        if self.adj.contains_key(&v) {
            return false;
        }
        self.adj.insert(v, BTreeSet::new());
        true
    }

    /// Inserts the edge `{u, v}` between existing vertices. Returns false if
    /// it was already present. Panics if either endpoint is missing or `u == v`.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "loops are not allowed: {u}");
        assert!(self.adj.contains_key(&u), "unknown vertex {u}");
        assert!(self.adj.contains_key(&v), "unknown vertex {v}");
        let inserted = self.adj.get_mut(&u).unwrap().insert(v);
        self.adj.get_mut(&v).unwrap().insert(u);
        inserted
    }

    /// Removes a vertex together with its incident edges.
    pub fn remove_vertex(&mut self, v: usize) -> bool {
        let Some(neighbors) = self.adj.remove(&v) else {
            return false;
        };
        for u in neighbors {
            self.adj.get_mut(&u).unwrap().remove(&v);
        }
        true
    }

    pub fn remove_edge(&mut self, e: Edge) -> bool {
        let (u, v) = e.endpoints();
        let Some(set) = self.adj.get_mut(&u) else {
            return false;
        };
        if !set.remove(&v) {
            return false;
        }
        self.adj.get_mut(&v).unwrap().remove(&u);
        true
    }

    pub fn has_vertex(&self, v: usize) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&v))
    }

    pub fn has_edge_e(&self, e: Edge) -> bool {
        let (u, v) = e.endpoints();
        self.has_edge(u, v)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.adj.keys().copied()
    }

    /// Neighbors of `v` in ascending order. Panics if `v` is absent.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj
            .get(&v)
            .unwrap_or_else(|| panic!("unknown vertex {v}"))
            .iter()
            .copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj
            .get(&v)
            .unwrap_or_else(|| panic!("unknown vertex {v}"))
            .len()
    }

    /// Maximum degree, 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.values().map(|s| s.len()).max().unwrap_or(0)
    }

    /// All edges in canonical order (sorted vertex pairs).
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (&u, set) in &self.adj {
            for &v in set.range((u + 1)..) {
                out.push(Edge::new(u, v));
            }
        }
        out
    }

    /// All vertex pairs that are not edges, in canonical order.
    pub fn non_edges(&self) -> Vec<Edge> {
        let vs: Vec<usize> = self.vertices().collect();
        let mut out = Vec::new();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if !self.has_edge(u, v) {
                    out.push(Edge::new(u, v));
                }
            }
        }
        out
    }

    /// The subgraph induced by `keep` (ids are preserved).
    pub fn induced(&self, keep: &BTreeSet<usize>) -> Graph {
        let mut g = Graph::new();
        for &v in keep {
            if self.has_vertex(v) {
                g.add_vertex(v);
            }
        }
        for (&u, set) in &self.adj {
            if !keep.contains(&u) {
                continue;
            }
            for &v in set.range((u + 1)..) {
                if keep.contains(&v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Returns the shared degree if every vertex has the same degree.
    /// The empty graph is not considered regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let mut degrees = self.adj.values().map(|s| s.len());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_connected(&self) -> bool {
        let Some(start) = self.vertices().next() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if seen.insert(u) {
                    stack.push(u);
                }
            }
        }
        seen.len() == self.vertex_count()
    }

    /// Largest vertex id, if any.
    pub fn max_vertex_id(&self) -> Option<usize> {
        self.adj.keys().next_back().copied()
    }

    /// Disjoint union: vertices of the i-th input are shifted past all ids used
    /// so far. Returns the union and, per input, the id offset applied to it.
    /// Inputs must use positive vertex ids.
    pub fn disjoint_union(parts: &[&Graph]) -> (Graph, Vec<usize>) {
        let mut g = Graph::new();
        let mut offsets = Vec::with_capacity(parts.len());
        for part in parts {
            let offset = g.max_vertex_id().unwrap_or(0);
            offsets.push(offset);
            for v in part.vertices() {
                assert!(v > 0, "disjoint_union requires positive vertex ids");
                assert!(g.add_vertex(v + offset), "vertex id collision in union");
            }
            for e in part.edges() {
                let (u, v) = e.endpoints();
                g.add_edge(u + offset, v + offset);
            }
        }
        (g, offsets)
    }

    /// Replaces every edge by a path of length two through a fresh vertex.
    /// New vertex ids are appended after the existing ids in canonical edge
    /// order; the mapping from new vertex to replaced edge is returned.
    pub fn subdivide(&self) -> (Graph, Vec<(usize, Edge)>) {
        let mut g = self.clone();
        let mut map = Vec::new();
        let first = self.max_vertex_id().map_or(1, |m| m + 1);
        for (next, e) in (first..).zip(self.edges()) {
            let (u, v) = e.endpoints();
            g.remove_edge(e);
            g.add_vertex(next);
            g.add_edge(u, next);
            g.add_edge(next, v);
            map.push((next, e));
        }
        (g, map)
    }
}
