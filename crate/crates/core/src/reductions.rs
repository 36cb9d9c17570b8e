//! Instance generators from clique and independent-set problems.
//!
//! Each generator maps a regular source graph (or a family of same-shape
//! source graphs) to an editing instance that is a yes-instance exactly when
//! the source problem is. They serve as test fixtures and benchmark families.

use crate::degree::DegreeSequence;
use crate::graph::{Edge, Graph};
use crate::instance::{Instance, OpSet};
use std::fmt;
use thiserror::Error;

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum ReductionError {
    #[error("input graph is not regular")]
    NotRegular,
    #[error("degree {d} is too small for parameter k = {k}")]
    DegreeTooSmall { d: usize, k: usize },
    #[error("parameter k = {k} exceeds the vertex count {n}")]
    KTooLarge { k: usize, n: usize },
    #[error("no input graphs")]
    EmptyInput,
    #[error("input graphs differ in {0}")]
    Inequivalent(&'static str),
}

/// How a generated vertex relates to the source instance(s).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ProvenanceEntry {
    /// Vertex `vertex` is vertex `original` of input graph `source`.
    CopiedVertex { vertex: usize, source: usize, original: usize },
    /// Vertex `vertex` replaced edge `edge` of the (composed) graph.
    SubdividedEdge { vertex: usize, edge: Edge },
}

impl fmt::Display for ProvenanceEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProvenanceEntry::CopiedVertex { vertex, source, original } => {
                write!(f, "copy {vertex} {source} {original}")
            }
            ProvenanceEntry::SubdividedEdge { vertex, edge } => {
                let (u, v) = edge.endpoints();
                write!(f, "subdivision {vertex} {u} {v}")
            }
        }
    }
}

/// Mapping of derived vertices back to the source, one line per entry.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Provenance {
    pub entries: Vec<ProvenanceEntry>,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for entry in &self.entries {
            writeln!(f, "{entry}")?;
        }
        Ok(())
    }
}

fn regular_degree(g: &Graph) -> Result<usize, ReductionError> {
    g.regular_degree().ok_or(ReductionError::NotRegular)
}

fn budget_for(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

fn repeat_sigma(parts: &[(usize, usize)]) -> DegreeSequence {
    let mut values = Vec::new();
    for &(value, count) in parts {
        values.extend(std::iter::repeat_n(value, count));
    }
    DegreeSequence::from_values(values)
}

/// Deciding whether `g` has a `k`-clique becomes deciding whether `k(k-1)/2`
/// edge deletions can lower `k` degrees by `k-1` each.
pub fn reduce_clique_edge_deletion(g: &Graph, k: usize) -> Result<Instance, ReductionError> {
    let d = regular_degree(g)?;
    if d + 1 < k {
        return Err(ReductionError::DegreeTooSmall { d, k });
    }
    let n = g.vertex_count();
    let sigma = repeat_sigma(&[(d, n - k), (d - k.saturating_sub(1), k)]);
    Ok(Instance::new(g.clone(), sigma, OpSet::ED, budget_for(k)))
}

/// Deciding whether `g` has an independent set of size `k` becomes deciding
/// whether `k(k-1)/2` additions can raise `k` degrees by `k-1` each.
pub fn reduce_independent_set_edge_addition(
    g: &Graph,
    k: usize,
) -> Result<Instance, ReductionError> {
    let d = regular_degree(g)?;
    let n = g.vertex_count();
    if k > n {
        return Err(ReductionError::KTooLarge { k, n });
    }
    let sigma = repeat_sigma(&[(d + k.saturating_sub(1), k), (d, n - k)]);
    Ok(Instance::new(g.clone(), sigma, OpSet::EA, budget_for(k)))
}

/// Clique via vertex deletions on the subdivision graph: deleting the
/// subdivision vertices of a clique's edges is the only way to hit the target.
pub fn reduce_clique_vertex_deletion(
    g: &Graph,
    k: usize,
) -> Result<(Instance, Provenance), ReductionError> {
    let d = regular_degree(g)?;
    if d + 1 < k + 3 {
        return Err(ReductionError::DegreeTooSmall { d, k });
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    let budget = budget_for(k);
    let (subdivided, map) = g.subdivide();
    let provenance = Provenance {
        entries: map
            .into_iter()
            .map(|(vertex, edge)| ProvenanceEntry::SubdividedEdge { vertex, edge })
            .collect(),
    };
    let p = n + m - budget;
    let sigma = repeat_sigma(&[(d, n - k), (d - k.saturating_sub(1), k), (2, p - n)]);
    Ok((Instance::new(subdivided, sigma, OpSet::VD, budget), provenance))
}

fn check_equivalent(graphs: &[Graph], need_same_edges: bool) -> Result<(usize, usize), ReductionError> {
    let first = graphs.first().ok_or(ReductionError::EmptyInput)?;
    let d = regular_degree(first)?;
    let n = first.vertex_count();
    for g in &graphs[1..] {
        if regular_degree(g)? != d {
            return Err(ReductionError::Inequivalent("regular degree"));
        }
        if g.vertex_count() != n {
            return Err(ReductionError::Inequivalent("vertex count"));
        }
        if need_same_edges && g.edge_count() != first.edge_count() {
            return Err(ReductionError::Inequivalent("edge count"));
        }
    }
    Ok((n, d))
}

fn compose(graphs: &[Graph]) -> (Graph, Provenance) {
    let parts: Vec<&Graph> = graphs.iter().collect();
    let (union, offsets) = Graph::disjoint_union(&parts);
    let mut entries = Vec::new();
    for (source, (g, &offset)) in graphs.iter().zip(&offsets).enumerate() {
        for v in g.vertices() {
            entries.push(ProvenanceEntry::CopiedVertex { vertex: v + offset, source, original: v });
        }
    }
    (union, Provenance { entries })
}

/// Composes many same-shape clique instances into one edge-deletion instance
/// that is yes iff some input has a `k`-clique.
pub fn cross_compose_edge_deletion(
    graphs: &[Graph],
    k: usize,
) -> Result<(Instance, Provenance), ReductionError> {
    let (n, d) = check_equivalent(graphs, false)?;
    if d + 1 < k {
        return Err(ReductionError::DegreeTooSmall { d, k });
    }
    let (union, provenance) = compose(graphs);
    let total = n * graphs.len();
    let sigma = repeat_sigma(&[(d, total - k), (d - k.saturating_sub(1), k)]);
    Ok((Instance::new(union, sigma, OpSet::ED, budget_for(k)), provenance))
}

/// Composes many same-shape clique instances into one vertex-deletion
/// instance on the subdivision of their disjoint union.
pub fn cross_compose_vertex_deletion(
    graphs: &[Graph],
    k: usize,
) -> Result<(Instance, Provenance), ReductionError> {
    let (n, d) = check_equivalent(graphs, true)?;
    if d + 1 < k + 3 {
        return Err(ReductionError::DegreeTooSmall { d, k });
    }
    let (union, mut provenance) = compose(graphs);
    let m = union.edge_count();
    let t = graphs.len();
    let budget = budget_for(k);
    let (subdivided, map) = union.subdivide();
    provenance.entries.extend(
        map.into_iter().map(|(vertex, edge)| ProvenanceEntry::SubdividedEdge { vertex, edge }),
    );
    let p = n * t + m - budget;
    let sigma = repeat_sigma(&[(d, n * t - k), (d - k.saturating_sub(1), k), (2, p - n * t)]);
    Ok((Instance::new(subdivided, sigma, OpSet::VD, budget), provenance))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::brute_force_solve;

    #[test]
    fn clique_edge_deletion_on_k4() {
        let inst = reduce_clique_edge_deletion(&Graph::complete(4), 3).unwrap();
        assert_eq!(inst.budget, 3);
        assert_eq!(inst.sigma, DegreeSequence::from_values(vec![3, 1, 1, 1]));
        assert!(brute_force_solve(&inst).unwrap().is_some());
    }

    #[test]
    fn clique_edge_deletion_on_triangle_free_c5() {
        let inst = reduce_clique_edge_deletion(&Graph::cycle(5), 3).unwrap();
        assert_eq!(inst.sigma, DegreeSequence::from_values(vec![2, 2, 0, 0, 0]));
        assert_eq!(brute_force_solve(&inst).unwrap(), None);
    }

    #[test]
    fn degenerate_k_is_emitted() {
        let inst = reduce_clique_edge_deletion(&Graph::cycle(4), 1).unwrap();
        assert_eq!(inst.budget, 0);
        assert_eq!(inst.sigma, DegreeSequence::from_values(vec![2; 4]));
        assert!(brute_force_solve(&inst).unwrap().is_some());
        let inst = reduce_independent_set_edge_addition(&Graph::cycle(4), 1).unwrap();
        assert_eq!(inst.budget, 0);
        assert!(brute_force_solve(&inst).unwrap().is_some());
    }

    #[test]
    fn independent_set_addition_cases() {
        let yes = reduce_independent_set_edge_addition(&Graph::cycle(4), 2).unwrap();
        assert_eq!(yes.sigma, DegreeSequence::from_values(vec![3, 3, 2, 2]));
        assert_eq!(yes.budget, 1);
        assert!(brute_force_solve(&yes).unwrap().is_some());

        let no = reduce_independent_set_edge_addition(&Graph::complete(4), 2).unwrap();
        assert_eq!(no.sigma, DegreeSequence::from_values(vec![4, 4, 3, 3]));
        assert_eq!(brute_force_solve(&no).unwrap(), None);
    }

    #[test]
    fn clique_vertex_deletion_on_k5() {
        let (inst, prov) = reduce_clique_vertex_deletion(&Graph::complete(5), 2).unwrap();
        assert_eq!(inst.graph.vertex_count(), 15);
        assert_eq!(inst.budget, 1);
        assert_eq!(inst.sigma.len(), 14);
        assert_eq!(inst.sigma.count_of(2), 9);
        assert_eq!(inst.sigma.count_of(3), 2);
        assert_eq!(inst.sigma.count_of(4), 3);
        assert_eq!(prov.entries.len(), 10);
        assert!(brute_force_solve(&inst).unwrap().is_some());
    }

    #[test]
    fn vertex_deletion_guard() {
        assert!(matches!(
            reduce_clique_vertex_deletion(&Graph::complete(5), 3),
            Err(ReductionError::DegreeTooSmall { d: 4, k: 3 })
        ));
    }

    #[test]
    fn cross_composition_requires_equivalence() {
        let err = cross_compose_edge_deletion(&[Graph::cycle(5), Graph::complete(4)], 3);
        assert!(matches!(err, Err(ReductionError::Inequivalent(_))));
        assert!(matches!(
            cross_compose_edge_deletion(&[], 2),
            Err(ReductionError::EmptyInput)
        ));
    }

    #[test]
    fn cross_composition_detects_any_yes_member() {
        let (yes, _) = cross_compose_edge_deletion(&[Graph::complete(4), Graph::complete(4)], 3)
            .unwrap();
        assert!(brute_force_solve(&yes).unwrap().is_some());
        let (no, _) = cross_compose_edge_deletion(&[Graph::cycle(5), Graph::cycle(5)], 3).unwrap();
        assert_eq!(brute_force_solve(&no).unwrap(), None);
    }

    #[test]
    fn sigma_length_arithmetic() {
        // Deletion/addition targets keep every vertex; vertex-deletion targets
        // lose exactly the budget.
        for k in 1..=3 {
            let inst = reduce_clique_edge_deletion(&Graph::complete(5), k).unwrap();
            assert_eq!(inst.sigma.len(), inst.graph.vertex_count());
            let inst = reduce_independent_set_edge_addition(&Graph::complete(5), k).unwrap();
            assert_eq!(inst.sigma.len(), inst.graph.vertex_count());
        }
        let (inst, _) = reduce_clique_vertex_deletion(&Graph::complete(6), 3).unwrap();
        assert_eq!(inst.sigma.len(), inst.graph.vertex_count() - inst.budget);
        let (inst, _) =
            cross_compose_vertex_deletion(&[Graph::complete(6), Graph::complete(6)], 2).unwrap();
        assert_eq!(inst.sigma.len(), inst.graph.vertex_count() - inst.budget);
    }

    #[test]
    fn provenance_lines_are_parseable() {
        let (_, prov) = cross_compose_vertex_deletion(&[Graph::complete(5)], 2).unwrap();
        let text = prov.to_string();
        assert!(text.lines().all(|l| l.starts_with("copy ") || l.starts_with("subdivision ")));
        assert_eq!(text.lines().count(), 5 + 10);
    }
}
