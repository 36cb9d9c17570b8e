//! Reduction rule removing vertices of excessive degree.
//!
//! A vertex whose degree exceeds `max(sigma) + budget_vd + budget_ed` cannot
//! reach a degree within the target by the remaining deletion operations, so
//! it must itself be deleted. Applying the rule exhaustively either proves the
//! instance infeasible or bounds the maximum degree of the graph.

use crate::instance::ExtendedInstance;

/// Result of exhaustively applying the high-degree vertex rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PreprocessOutcome {
    /// The reduced instance, with the vertex-deletion budget already charged
    /// for `forced_deletions`. A solution `(U, D, A)` of the reduced instance
    /// lifts to `(U ∪ forced_deletions, D, A)` on the original.
    Reduced {
        instance: ExtendedInstance,
        forced_deletions: Vec<usize>,
    },
    /// A vertex had to be deleted but no vertex-deletion budget remained.
    No,
}

impl PreprocessOutcome {
    pub fn is_no(&self) -> bool {
        matches!(self, PreprocessOutcome::No)
    }
}

/// Exhaustively deletes every vertex with degree above
/// `max(sigma) + budget_vd + budget_ed`, decrementing the vertex-deletion
/// budget per deletion. Highest degree first, ties broken by smallest id.
pub fn apply_vertex_deletion_rule(inst: &ExtendedInstance) -> PreprocessOutcome {
    let delta = inst.sigma.max();
    let mut graph = inst.graph.clone();
    let mut budget_vd = inst.budget_vd;
    let mut forced = Vec::new();

    loop {
        let threshold = delta + budget_vd + inst.budget_ed;
        let candidate = graph
            .vertices()
            .filter(|&v| graph.degree(v) > threshold)
            .max_by(|&a, &b| graph.degree(a).cmp(&graph.degree(b)).then(b.cmp(&a)));
        let Some(v) = candidate else {
            break;
        };
        if budget_vd == 0 {
            return PreprocessOutcome::No;
        }
        graph.remove_vertex(v);
        budget_vd -= 1;
        forced.push(v);
    }

    PreprocessOutcome::Reduced {
        instance: ExtendedInstance {
            graph,
            sigma: inst.sigma.clone(),
            budget_vd,
            budget_ed: inst.budget_ed,
            budget_ea: inst.budget_ea,
        },
        forced_deletions: forced,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree::DegreeSequence;
    use crate::graph::Graph;

    fn seq(values: &[usize]) -> DegreeSequence {
        DegreeSequence::from_values(values.to_vec())
    }

    #[test]
    fn star_center_is_deleted() {
        // Center of the 4-leaf star has degree 4 > 2 + 1 + 0.
        let inst = ExtendedInstance::new(Graph::star(4), seq(&[2, 2, 1, 1, 0]), 1, 0, 0);
        match apply_vertex_deletion_rule(&inst) {
            PreprocessOutcome::Reduced { instance, forced_deletions } => {
                assert_eq!(forced_deletions, vec![1]);
                assert_eq!(instance.budget_vd, 0);
                assert_eq!(instance.graph.vertex_count(), 4);
                assert_eq!(instance.graph.edge_count(), 0);
            }
            PreprocessOutcome::No => panic!("rule should reduce, not reject"),
        }
    }

    #[test]
    fn untouched_when_degrees_are_small() {
        let inst = ExtendedInstance::new(Graph::cycle(4), seq(&[2, 2, 2, 2]), 1, 1, 1);
        match apply_vertex_deletion_rule(&inst) {
            PreprocessOutcome::Reduced { instance, forced_deletions } => {
                assert!(forced_deletions.is_empty());
                assert_eq!(instance.graph, inst.graph);
                assert_eq!(instance.budget_vd, 1);
            }
            PreprocessOutcome::No => panic!("rule must not fire"),
        }
    }

    #[test]
    fn no_budget_means_no() {
        // Center of the 5-leaf star has degree 5 > 1 + 0 + 1 and k_vd = 0.
        let inst = ExtendedInstance::new(Graph::star(5), seq(&[1, 1, 1, 1, 1, 1]), 0, 1, 0);
        assert_eq!(apply_vertex_deletion_rule(&inst), PreprocessOutcome::No);
    }

    #[test]
    fn reduced_graph_respects_degree_bound() {
        let mut g = Graph::complete(5);
        for v in 6..=9 {
            g.add_vertex(v);
            for u in 1..=3 {
                g.add_edge(u, v);
            }
        }
        let inst = ExtendedInstance::new(g, seq(&[2, 2, 2, 1, 1, 1, 0, 0, 0]), 3, 1, 0);
        if let PreprocessOutcome::Reduced { instance, forced_deletions } =
            apply_vertex_deletion_rule(&inst)
        {
            let bound = instance.sigma.max() + instance.budget_vd + instance.budget_ed;
            assert!(instance.graph.max_degree() <= bound);
            assert_eq!(forced_deletions.len() + instance.budget_vd, inst.budget_vd);
        } else {
            panic!("expected a reduced instance");
        }
    }
}
