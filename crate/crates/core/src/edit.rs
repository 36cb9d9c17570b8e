//! Edit sets and their application.
//!
//! An edit set is a triple of deleted vertices, deleted edges, and added
//! edges. Applying it to a graph produces a new graph; the input is left
//! untouched.

use crate::graph::{Edge, Graph};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

/// A solution candidate: vertices to delete, edges to delete, pairs to add.
///
/// The derived ordering (deleted vertices, then deleted edges, then added
/// edges, each as a sorted set) is the canonical encoding used whenever a
/// deterministic representative among equal-size solutions is needed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct EditSet {
    pub deleted_vertices: BTreeSet<usize>,
    pub deleted_edges: BTreeSet<Edge>,
    pub added_edges: BTreeSet<Edge>,
}

impl EditSet {
    pub fn empty() -> Self {
        EditSet::default()
    }

    /// Total number of operations.
    pub fn size(&self) -> usize {
        self.deleted_vertices.len() + self.deleted_edges.len() + self.added_edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }
}

impl fmt::Display for EditSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U={:?} D={:?} A={:?}", self.deleted_vertices, self.deleted_edges, self.added_edges)
    }
}

/// Structural reasons an edit set cannot be applied to a graph.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum EditError {
    #[error("deleted vertex {0} is not in the graph")]
    UnknownDeletedVertex(usize),
    #[error("deleted edge {0} is not an edge of the graph minus deleted vertices")]
    DeletedEdgeMissing(Edge),
    #[error("added edge {0} has an endpoint outside the graph")]
    AddedEdgeUnknownEndpoint(Edge),
    #[error("added edge {0} has a deleted endpoint")]
    AddedEdgeTouchesDeleted(Edge),
    #[error("added edge {0} is already an edge of the graph")]
    AddedEdgePresent(Edge),
}

/// Applies `e` to `g`, producing the edited graph. The checks mirror the
/// structural invariants of [`EditSet`]: deletions must name existing
/// vertices/edges (edges surviving the vertex deletions), additions must be
/// new pairs avoiding deleted vertices.
pub fn apply_edits(g: &Graph, e: &EditSet) -> Result<Graph, EditError> {
    for &v in &e.deleted_vertices {
        if !g.has_vertex(v) {
            return Err(EditError::UnknownDeletedVertex(v));
        }
    }
    for &d in &e.deleted_edges {
        let (u, v) = d.endpoints();
        if e.deleted_vertices.contains(&u)
            || e.deleted_vertices.contains(&v)
            || !g.has_edge(u, v)
        {
            return Err(EditError::DeletedEdgeMissing(d));
        }
    }
    for &a in &e.added_edges {
        let (u, v) = a.endpoints();
        if !g.has_vertex(u) || !g.has_vertex(v) {
            return Err(EditError::AddedEdgeUnknownEndpoint(a));
        }
        if e.deleted_vertices.contains(&u) || e.deleted_vertices.contains(&v) {
            return Err(EditError::AddedEdgeTouchesDeleted(a));
        }
        if g.has_edge(u, v) {
            return Err(EditError::AddedEdgePresent(a));
        }
    }

    let mut out = g.clone();
    for &v in &e.deleted_vertices {
        out.remove_vertex(v);
    }
    for &d in &e.deleted_edges {
        out.remove_edge(d);
    }
    for &a in &e.added_edges {
        let (u, v) = a.endpoints();
        out.add_edge(u, v);
    }
    Ok(out)
}
