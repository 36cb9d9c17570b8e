//! Problem instances and solution checking.
//!
//! An [`Instance`] carries a graph, a target degree sequence, the set of
//! allowed operations and one combined budget. An [`ExtendedInstance`] has a
//! separate budget per operation instead. A solution is an edit set that is
//! structurally applicable, respects the allowed operations and budgets, and
//! whose edited graph has exactly the target degree sequence.

use crate::degree::DegreeSequence;
use crate::edit::{apply_edits, EditError, EditSet};
use crate::graph::Graph;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// One editing operation kind.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Op {
    VertexDeletion,
    EdgeDeletion,
    EdgeAddition,
}

impl Op {
    pub fn token(self) -> &'static str {
        match self {
            Op::VertexDeletion => "vd",
            Op::EdgeDeletion => "ed",
            Op::EdgeAddition => "ea",
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// A subset of the three operation kinds.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct OpSet {
    bits: u8,
}

impl OpSet {
    pub const EMPTY: OpSet = OpSet { bits: 0 };
    pub const VD: OpSet = OpSet { bits: 1 };
    pub const ED: OpSet = OpSet { bits: 2 };
    pub const EA: OpSet = OpSet { bits: 4 };
    pub const ALL: OpSet = OpSet { bits: 7 };

    pub fn from_ops(ops: &[Op]) -> Self {
        ops.iter().fold(OpSet::EMPTY, |s, &op| s.with(op))
    }

    pub fn with(self, op: Op) -> Self {
        let bit = match op {
            Op::VertexDeletion => 1,
            Op::EdgeDeletion => 2,
            Op::EdgeAddition => 4,
        };
        OpSet { bits: self.bits | bit }
    }

    pub fn contains(self, op: Op) -> bool {
        let bit = match op {
            Op::VertexDeletion => 1,
            Op::EdgeDeletion => 2,
            Op::EdgeAddition => 4,
        };
        self.bits & bit != 0
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn ops(self) -> Vec<Op> {
        [Op::VertexDeletion, Op::EdgeDeletion, Op::EdgeAddition]
            .into_iter()
            .filter(|&op| self.contains(op))
            .collect()
    }

    /// All seven nonempty subsets.
    pub fn all_nonempty() -> Vec<OpSet> {
        (1..=7).map(|bits| OpSet { bits }).collect()
    }
}

impl fmt::Display for OpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for op in self.ops() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{op}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for OpSet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut set = OpSet::EMPTY;
        for token in s.split([',', ' ']).filter(|t| !t.is_empty()) {
            set = match token {
                "vd" => set.with(Op::VertexDeletion),
                "ed" => set.with(Op::EdgeDeletion),
                "ea" => set.with(Op::EdgeAddition),
                other => return Err(format!("unknown operation `{other}`")),
            };
        }
        if set.is_empty() {
            return Err("operation set is empty".to_string());
        }
        Ok(set)
    }
}

/// Instance with a combined budget over an allowed operation set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Instance {
    pub graph: Graph,
    pub sigma: DegreeSequence,
    pub ops: OpSet,
    pub budget: usize,
}

impl Instance {
    pub fn new(graph: Graph, sigma: DegreeSequence, ops: OpSet, budget: usize) -> Self {
        Instance { graph, sigma, ops, budget }
    }

    /// All per-operation budget splits summing to exactly the combined budget,
    /// with zero for operations outside the allowed set. Any solution within
    /// the combined budget fits componentwise under at least one split.
    pub fn budget_splits(&self) -> Vec<(usize, usize, usize)> {
        let k = self.budget;
        let max_vd = if self.ops.contains(Op::VertexDeletion) { k } else { 0 };
        let max_ed = if self.ops.contains(Op::EdgeDeletion) { k } else { 0 };
        let allow_ea = self.ops.contains(Op::EdgeAddition);
        let mut out = Vec::new();
        for kvd in 0..=max_vd {
            for ked in 0..=max_ed.min(k - kvd) {
                let kea = k - kvd - ked;
                if kea == 0 || allow_ea {
                    out.push((kvd, ked, kea));
                }
            }
        }
        out
    }

    /// The extended instance for one budget split.
    pub fn with_split(&self, split: (usize, usize, usize)) -> ExtendedInstance {
        ExtendedInstance {
            graph: self.graph.clone(),
            sigma: self.sigma.clone(),
            budget_vd: split.0,
            budget_ed: split.1,
            budget_ea: split.2,
        }
    }
}

/// Instance with one budget per operation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtendedInstance {
    pub graph: Graph,
    pub sigma: DegreeSequence,
    pub budget_vd: usize,
    pub budget_ed: usize,
    pub budget_ea: usize,
}

impl ExtendedInstance {
    pub fn new(
        graph: Graph,
        sigma: DegreeSequence,
        budget_vd: usize,
        budget_ed: usize,
        budget_ea: usize,
    ) -> Self {
        ExtendedInstance { graph, sigma, budget_vd, budget_ed, budget_ea }
    }

    pub fn total_budget(&self) -> usize {
        self.budget_vd + self.budget_ed + self.budget_ea
    }
}

/// Why an edit set is not a solution.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum SolutionError {
    #[error(transparent)]
    Edit(#[from] EditError),
    #[error("operation {op} is not allowed")]
    OperationNotAllowed { op: Op },
    #[error("budget exceeded: {used} operations, budget {budget}")]
    BudgetExceeded { used: usize, budget: usize },
    #[error("{op} budget exceeded: {used} used, budget {budget}")]
    OpBudgetExceeded { op: Op, used: usize, budget: usize },
    #[error("degree sequence mismatch")]
    DegreeSequenceMismatch,
}

/// Full check of `e` against an [`Instance`]; `Err` carries the first reason
/// found.
pub fn check_solution(inst: &Instance, e: &EditSet) -> Result<(), SolutionError> {
    for (op, used) in [
        (Op::VertexDeletion, e.deleted_vertices.len()),
        (Op::EdgeDeletion, e.deleted_edges.len()),
        (Op::EdgeAddition, e.added_edges.len()),
    ] {
        if used > 0 && !inst.ops.contains(op) {
            return Err(SolutionError::OperationNotAllowed { op });
        }
    }
    if e.size() > inst.budget {
        return Err(SolutionError::BudgetExceeded { used: e.size(), budget: inst.budget });
    }
    check_degrees(&inst.graph, &inst.sigma, e)
}

/// Full check of `e` against an [`ExtendedInstance`].
pub fn check_solution_extended(inst: &ExtendedInstance, e: &EditSet) -> Result<(), SolutionError> {
    for (op, used, budget) in [
        (Op::VertexDeletion, e.deleted_vertices.len(), inst.budget_vd),
        (Op::EdgeDeletion, e.deleted_edges.len(), inst.budget_ed),
        (Op::EdgeAddition, e.added_edges.len(), inst.budget_ea),
    ] {
        if used > budget {
            return Err(SolutionError::OpBudgetExceeded { op, used, budget });
        }
    }
    check_degrees(&inst.graph, &inst.sigma, e)
}

fn check_degrees(g: &Graph, sigma: &DegreeSequence, e: &EditSet) -> Result<(), SolutionError> {
    let edited = apply_edits(g, e)?;
    if &DegreeSequence::of_graph(&edited) != sigma {
        return Err(SolutionError::DegreeSequenceMismatch);
    }
    Ok(())
}

/// Boolean form of [`check_solution`].
pub fn verify_solution(inst: &Instance, e: &EditSet) -> bool {
    check_solution(inst, e).is_ok()
}

/// Boolean form of [`check_solution_extended`].
pub fn verify_solution_extended(inst: &ExtendedInstance, e: &EditSet) -> bool {
    check_solution_extended(inst, e).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    fn seq(values: &[usize]) -> DegreeSequence {
        DegreeSequence::from_values(values.to_vec())
    }

    #[test]
    fn empty_edit_on_matching_instance() {
        let inst = Instance::new(Graph::complete(3), seq(&[2, 2, 2]), OpSet::EA, 0);
        assert!(verify_solution(&inst, &EditSet::empty()));
    }

    #[test]
    fn two_edge_deletions_within_budget() {
        let inst = Instance::new(Graph::complete(3), seq(&[1, 1, 0]), OpSet::ED, 2);
        let e = EditSet {
            deleted_edges: [Edge::new(1, 2), Edge::new(2, 3)].into_iter().collect(),
            ..EditSet::default()
        };
        assert!(verify_solution(&inst, &e));
        let tight = Instance { budget: 1, ..inst };
        assert_eq!(
            check_solution(&tight, &e),
            Err(SolutionError::BudgetExceeded { used: 2, budget: 1 })
        );
    }

    #[test]
    fn disallowed_operation_is_reported() {
        let inst = Instance::new(Graph::complete(3), seq(&[1, 1, 0]), OpSet::EA, 2);
        let e = EditSet {
            deleted_edges: [Edge::new(1, 2), Edge::new(2, 3)].into_iter().collect(),
            ..EditSet::default()
        };
        assert_eq!(
            check_solution(&inst, &e),
            Err(SolutionError::OperationNotAllowed { op: Op::EdgeDeletion })
        );
    }

    #[test]
    fn extended_budgets_are_componentwise() {
        let inst = ExtendedInstance::new(Graph::complete(3), seq(&[1, 1, 0]), 0, 2, 0);
        let e = EditSet {
            deleted_edges: [Edge::new(1, 2), Edge::new(2, 3)].into_iter().collect(),
            ..EditSet::default()
        };
        assert!(verify_solution_extended(&inst, &e));
        let tight = ExtendedInstance { budget_ed: 1, ..inst };
        assert_eq!(
            check_solution_extended(&tight, &e),
            Err(SolutionError::OpBudgetExceeded { op: Op::EdgeDeletion, used: 2, budget: 1 })
        );
    }

    #[test]
    fn degree_mismatch_is_reported() {
        let inst = Instance::new(Graph::complete(3), seq(&[2, 2, 2]), OpSet::ED, 2);
        let e = EditSet {
            deleted_edges: [Edge::new(1, 2)].into_iter().collect(),
            ..EditSet::default()
        };
        assert_eq!(check_solution(&inst, &e), Err(SolutionError::DegreeSequenceMismatch));
    }

    #[test]
    fn budget_splits_cover_allowed_ops_only() {
        let inst = Instance::new(Graph::complete(3), seq(&[2, 2, 2]), OpSet::ED, 2);
        assert_eq!(inst.budget_splits(), vec![(0, 2, 0)]);
        let all = Instance { ops: OpSet::ALL, ..inst };
        assert_eq!(all.budget_splits().len(), 6);
        for (a, b, c) in all.budget_splits() {
            assert_eq!(a + b + c, 2);
        }
    }

    #[test]
    fn opset_parsing_round_trips() {
        for set in OpSet::all_nonempty() {
            let text = set.to_string();
            assert_eq!(text.parse::<OpSet>().unwrap(), set);
        }
        assert!("".parse::<OpSet>().is_err());
        assert!("vx".parse::<OpSet>().is_err());
    }
}
