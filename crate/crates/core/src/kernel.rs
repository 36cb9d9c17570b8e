//! Polynomial kernel for edge-addition-only instances.
//!
//! When only additions are allowed, at most `2k` vertices ever change degree,
//! so per degree class only a bounded number of representatives matters. The
//! kernel keeps `min(class size, 2k(max+1))` vertices per class, replaces the
//! discarded vertices by a small clique gadget that absorbs the boundary
//! edges, and trims the target sequence accordingly.

use crate::degree::DegreeSequence;
use crate::edit::EditSet;
use crate::graph::Edge;
use crate::instance::{Instance, Op, OpSet};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum KernelError {
    #[error("kernelization requires the operation set {{ea}}, got {{{0}}}")]
    UnsupportedOps(OpSet),
    #[error("solution contains {0}, which is not an edge-addition-only solution")]
    NotAdditionOnly(Op),
    #[error("solution adds {0}, which touches a gadget vertex")]
    GadgetEdge(Edge),
}

/// A reduced instance plus the bookkeeping needed to lift solutions back.
#[derive(Clone, Debug)]
pub struct KernelResult {
    pub kernel: Instance,
    /// Kernel vertex to original vertex, for every kept non-gadget vertex.
    pub kept_vertices: BTreeMap<usize, usize>,
    /// The clique gadget, ascending ids.
    pub gadget_vertices: Vec<usize>,
    /// Per degree, the kept representatives of that degree class.
    pub w_sets: BTreeMap<usize, Vec<usize>>,
}

impl KernelResult {
    /// Maps an addition-only solution of the kernel back to the original
    /// instance. Valid kernel solutions never touch the gadget: its degrees
    /// already occupy the oversized entries of the target sequence.
    pub fn lift(&self, solution: &EditSet) -> Result<EditSet, KernelError> {
        check_addition_only(solution)?;
        let gadget: BTreeSet<usize> = self.gadget_vertices.iter().copied().collect();
        let mut added = BTreeSet::new();
        for &e in &solution.added_edges {
            let (u, v) = e.endpoints();
            if gadget.contains(&u) || gadget.contains(&v) {
                return Err(KernelError::GadgetEdge(e));
            }
            added.insert(Edge::new(self.kept_vertices[&u], self.kept_vertices[&v]));
        }
        Ok(EditSet { added_edges: added, ..EditSet::default() })
    }
}

/// Outcome of kernelization.
#[derive(Clone, Debug)]
pub enum KernelOutcome {
    /// Additions cannot lower degrees; some vertex already exceeds the target
    /// maximum.
    No,
    /// Every degree class is small; the instance is its own kernel.
    Unchanged,
    Reduced(KernelResult),
}

impl KernelOutcome {
    /// Lifts a solution of the kernelized instance to the original one.
    /// For [`KernelOutcome::Unchanged`] this is the identity.
    pub fn lift(&self, solution: &EditSet) -> Result<EditSet, KernelError> {
        match self {
            KernelOutcome::No => Ok(solution.clone()),
            KernelOutcome::Unchanged => {
                check_addition_only(solution)?;
                Ok(solution.clone())
            }
            KernelOutcome::Reduced(res) => res.lift(solution),
        }
    }

    pub fn is_no(&self) -> bool {
        matches!(self, KernelOutcome::No)
    }
}

fn check_addition_only(solution: &EditSet) -> Result<(), KernelError> {
    if !solution.deleted_vertices.is_empty() {
        return Err(KernelError::NotAdditionOnly(Op::VertexDeletion));
    }
    if !solution.deleted_edges.is_empty() {
        return Err(KernelError::NotAdditionOnly(Op::EdgeDeletion));
    }
    Ok(())
}

/// Kernelizes an edge-addition instance down to `O(k * max^2)` vertices.
pub fn kernelize_edge_addition(inst: &Instance) -> Result<KernelOutcome, KernelError> {
    if inst.ops != OpSet::EA {
        return Err(KernelError::UnsupportedOps(inst.ops));
    }
    let g = &inst.graph;
    let delta = inst.sigma.max();
    if g.max_degree() > delta {
        return Ok(KernelOutcome::No);
    }

    let threshold = 2 * inst.budget * (delta + 1);
    let mut classes: BTreeMap<usize, Vec<usize>> = (0..=delta).map(|i| (i, vec![])).collect();
    for v in g.vertices() {
        classes.get_mut(&g.degree(v)).unwrap().push(v);
    }
    if classes.values().all(|class| class.len() <= threshold) {
        return Ok(KernelOutcome::Unchanged);
    }

    // At most 2k vertices change degree, so at least |class| - threshold
    // vertices of each degree keep it; the target must offer that many slots.
    for (&i, class) in &classes {
        let dropped = class.len().saturating_sub(threshold);
        if inst.sigma.count_of(i) < dropped {
            return Ok(KernelOutcome::No);
        }
    }

    let mut w_sets: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut kept: BTreeSet<usize> = BTreeSet::new();
    for (&i, class) in &classes {
        let take = class.len().min(threshold);
        let reps: Vec<usize> = class.iter().copied().take(take).collect();
        kept.extend(reps.iter().copied());
        w_sets.insert(i, reps);
    }

    let mut kernel_graph = g.induced(&kept);
    let gadget_size = delta + 2;
    let first_gadget = g.max_vertex_id().map_or(1, |m| m + 1);
    let gadget_vertices: Vec<usize> = (first_gadget..first_gadget + gadget_size).collect();
    for &v in &gadget_vertices {
        kernel_graph.add_vertex(v);
    }
    for (i, &u) in gadget_vertices.iter().enumerate() {
        for &v in &gadget_vertices[i + 1..] {
            kernel_graph.add_edge(u, v);
        }
    }
    // Each kept vertex regains its lost boundary degree from the gadget.
    for &u in &kept {
        let boundary = g.neighbors(u).filter(|v| !kept.contains(v)).count();
        for &v in &gadget_vertices[..boundary] {
            kernel_graph.add_edge(u, v);
        }
    }

    let mut sigma_values: Vec<usize> =
        gadget_vertices.iter().map(|&v| kernel_graph.degree(v)).collect();
    for (&i, class) in &classes {
        let dropped = class.len() - w_sets[&i].len();
        let slots = inst.sigma.count_of(i) - dropped;
        sigma_values.extend(std::iter::repeat_n(i, slots));
    }

    let kernel = Instance::new(
        kernel_graph,
        DegreeSequence::from_values(sigma_values),
        OpSet::EA,
        inst.budget,
    );
    Ok(KernelOutcome::Reduced(KernelResult {
        kernel,
        kept_vertices: kept.iter().map(|&v| (v, v)).collect(),
        gadget_vertices,
        w_sets,
    }))
}

/// Free-function form of [`KernelResult::lift`].
pub fn lift_kernel_solution(res: &KernelResult, solution: &EditSet) -> Result<EditSet, KernelError> {
    res.lift(solution)
}

/// Upper bound on the kernel's vertex count for given budget and maximum.
pub fn kernel_size_bound(budget: usize, delta: usize) -> usize {
    2 * budget * (delta + 1) * (delta + 1) + delta + 2
}
