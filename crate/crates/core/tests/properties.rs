//! Cross-cutting properties: value-type laws, solver soundness invariants,
//! and agreement between independent solving routes on random inputs.

use degseq::corpus::{random_graph, random_graph_max_degree, random_planted_instance};
use degseq::degree::{degree_vector, degree_vector_of_sequence, vectors_equal_padded, DegreeVector};
use degseq::edit::apply_edits;
use degseq::graph::{Edge, Graph};
use degseq::instance::{verify_solution_extended, ExtendedInstance, Instance, OpSet};
use degseq::oracle::{brute_force_solve, brute_force_solve_extended};
use degseq::separation::{
    build_separation_graph, dp_solve_colored, dp_tables, planted_coloring, random_coloring,
    solve_derandomized,
};
use degseq::universal::{
    build_universal_set, colorings_from_universal_set, position_count, verify_universal_set,
    Strategy as UsetStrategy,
};
use degseq::{mix_seed, DegreeSequence};
use proptest::prelude::*;
use std::collections::BTreeSet;

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 1..=n {
        for v in (u + 1)..=n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, mask)| graph_from_mask(n, mask))
}

proptest! {
    #[test]
    fn degree_vector_round_trips(g in arb_graph(7)) {
        let sigma = DegreeSequence::of_graph(&g);
        prop_assert_eq!(degree_vector_of_sequence(&sigma), degree_vector(&g));
        prop_assert_eq!(degree_vector(&g).sum(), g.vertex_count());
    }

    #[test]
    fn padded_equality_ignores_trailing_zeros(counts in proptest::collection::vec(0usize..5, 0..6), zeros in 0usize..4) {
        let a = DegreeVector::new(counts.clone());
        let mut padded = counts.clone();
        padded.extend(std::iter::repeat_n(0, zeros));
        let b = DegreeVector::new(padded);
        prop_assert!(vectors_equal_padded(&a, &b));
    }

    #[test]
    fn applied_edits_conserve_counts(seed in any::<u64>()) {
        let g = random_graph(6, (seed % 10) as usize, mix_seed(seed, 1));
        if let Some(e) = degseq::corpus::random_edit_set(&g, 1, 1, 1, 6, mix_seed(seed, 2)) {
            let edited = apply_edits(&g, &e).unwrap();
            prop_assert_eq!(edited.vertex_count(), g.vertex_count() - e.deleted_vertices.len());
            let incident: usize = g
                .edges()
                .iter()
                .filter(|edge| {
                    let (u, v) = edge.endpoints();
                    e.deleted_vertices.contains(&u) || e.deleted_vertices.contains(&v)
                })
                .count();
            prop_assert_eq!(
                edited.edge_count(),
                g.edge_count() - e.deleted_edges.len() - incident + e.added_edges.len()
            );
        }
    }

    #[test]
    fn verified_solutions_reproduce_sigma(seed in any::<u64>()) {
        let p = random_planted_instance(seed % 10_000);
        let edited = apply_edits(&p.instance.graph, &p.solution).unwrap();
        // Independent recount.
        let mut degrees: Vec<usize> = edited.vertices().map(|v| edited.degree(v)).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        prop_assert_eq!(degrees.as_slice(), p.instance.sigma.values());
    }
}

/// Separation-graph structure: yellow vertices of distinct components are
/// never adjacent in the host graph.
#[test]
fn yellow_vertices_do_not_straddle_components() {
    for seed in 0..300u64 {
        let g = random_graph(7, (seed % 12) as usize, mix_seed(seed, 3));
        let coloring = random_coloring(&g, mix_seed(seed, 4));
        let sep = build_separation_graph(&g, &coloring);
        for (i, a) in sep.components.iter().enumerate() {
            for b in sep.components.iter().skip(i + 1) {
                for &u in &a.yellow_vertices {
                    for &v in &b.yellow_vertices {
                        assert!(!g.has_edge(u, v), "seed {seed}: yellow edge across components");
                    }
                }
            }
        }
        // Components partition the selected edges.
        let mut all_edges: Vec<Edge> = sep.components.iter().flat_map(|c| c.edges.clone()).collect();
        all_edges.sort();
        let selected: Vec<Edge> = sep.selected_edges.iter().copied().collect();
        assert_eq!(all_edges, selected);
    }
}

/// Every DP record is internally consistent: re-applying its witness from
/// scratch reproduces the operation counts, the yellow degree multiset, and
/// the degree vector; the witness is exactly the union of its selected
/// components' material.
#[test]
fn dp_records_are_sound() {
    for seed in 0..150u64 {
        let g = random_graph_max_degree(8, 8, 4, mix_seed(seed, 5));
        let sigma_source = random_graph_max_degree(8, 7, 4, mix_seed(seed, 6));
        let sigma = DegreeSequence::of_graph(&sigma_source);
        let inst = ExtendedInstance::new(g.clone(), sigma, 1, 1, 1);
        let coloring = random_coloring(&g, mix_seed(seed, 7));
        let run = dp_tables(&inst, &coloring);

        let base = degree_vector(&g);
        let k_total = inst.total_budget();
        let delta = inst.sigma.max();
        let slack = (k_total + delta + 1) * inst.budget_vd + 2 * (inst.budget_ed + inst.budget_ea);

        for (key, wit) in &run.final_table {
            // Budgets and counts.
            assert!(key.used_vd <= inst.budget_vd);
            assert!(key.used_ed <= inst.budget_ed);
            assert!(key.used_ea <= inst.budget_ea);
            assert_eq!(key.used_vd, wit.edit.deleted_vertices.len());
            assert_eq!(key.used_ed, wit.edit.deleted_edges.len());
            assert_eq!(key.used_ea, wit.edit.added_edges.len());
            assert!(key.yellow_degrees.len() <= 2 * inst.budget_ea);
            assert!(key.yellow_degrees.iter().all(|&d| d <= delta));

            // Witness matches selected components exactly.
            let mut reds = BTreeSet::new();
            let mut red_edges = BTreeSet::new();
            let mut yellows = BTreeSet::new();
            for &ci in &wit.selected {
                reds.extend(run.components[ci].red_vertices.iter().copied());
                red_edges.extend(run.components[ci].red_edges.iter().copied());
                yellows.extend(run.components[ci].yellow_vertices.iter().copied());
            }
            assert_eq!(reds, wit.edit.deleted_vertices);
            assert_eq!(red_edges, wit.edit.deleted_edges);
            for a in &wit.edit.added_edges {
                let (u, v) = a.endpoints();
                assert!(yellows.contains(&u) && yellows.contains(&v));
            }

            // Re-derive the record from the witness alone.
            let edited = apply_edits(&g, &wit.edit).unwrap();
            assert_eq!(&edited, &wit.graph);
            let mut x: Vec<usize> = wit.yellows.iter().map(|&y| edited.degree(y)).collect();
            x.sort_unstable();
            assert_eq!(&x, &key.yellow_degrees);
            assert!(vectors_equal_padded(
                &DegreeVector::new(key.delta.clone()),
                &degree_vector(&edited)
            ));

            // Per-entry drift of the degree vector is bounded.
            for (i, &count) in key.delta.iter().enumerate() {
                assert!(count.abs_diff(base.get(i)) <= slack, "seed {seed}: entry {i} drifted");
            }
        }
    }
}

/// A planted coloring always lets the DP find some valid solution.
#[test]
fn planted_colorings_are_complete() {
    for seed in 0..150u64 {
        let p = random_planted_instance(seed);
        let coloring = planted_coloring(&p.instance.graph, &p.solution);
        let found = dp_solve_colored(&p.instance, &coloring)
            .unwrap_or_else(|| panic!("seed {seed}: planted coloring found nothing"));
        assert!(verify_solution_extended(&p.instance, &found));
    }
}

/// The bounded deterministic sweep agrees with a sweep of every coloring
/// induced by an exhaustive universal set (ordered pairs, two-stage
/// recoloring) on tiny instances.
#[test]
fn bounded_sweep_matches_universal_pair_stream() {
    let mut checked = 0;
    for seed in 0..160u64 {
        let g = random_graph(4, (seed % 7) as usize, mix_seed(seed, 8));
        if position_count(&g) > 8 {
            continue;
        }
        let sigma = degseq::corpus::perturbed_sigma(&g, 0, 1, 1, 3, mix_seed(seed, 9))
            .unwrap_or_else(|| DegreeSequence::of_graph(&g));
        let inst = ExtendedInstance::new(g.clone(), sigma, 1, 1, 1);

        let u = build_universal_set(position_count(&g), position_count(&g), UsetStrategy::Exhaustive)
            .unwrap();
        let mut stream_found = false;
        for coloring in colorings_from_universal_set(&g, &u).unwrap() {
            if dp_solve_colored(&inst, &coloring).is_some() {
                stream_found = true;
                break;
            }
        }
        let bounded = degseq::separation::solve_derandomized_extended(&inst).unwrap();
        assert_eq!(bounded.is_some(), stream_found, "seed {seed}");
        checked += 1;
    }
    assert!(checked > 100);
}

/// Derandomized decisions match the oracle on random small instances, and a
/// combined budget is solvable exactly when some exact split is.
#[test]
fn derandomized_and_split_semantics_match_oracle() {
    for seed in 0..250u64 {
        let g = random_graph(5, (seed % 11) as usize, mix_seed(seed, 10));
        let ops = OpSet::all_nonempty()[(seed % 7) as usize];
        let k = (seed % 3) as usize;
        let sigma = degseq::corpus::perturbed_sigma(&g, k.min(1), k, k, 4, mix_seed(seed, 11))
            .unwrap_or_else(|| DegreeSequence::of_graph(&g));
        if sigma.max() > 4 {
            continue;
        }
        let inst = Instance::new(g, sigma, ops, k);

        let oracle = brute_force_solve(&inst).unwrap();
        let derand = solve_derandomized(&inst).unwrap();
        assert_eq!(oracle.is_some(), derand.is_some(), "seed {seed}");

        let split_yes = inst
            .budget_splits()
            .into_iter()
            .any(|s| brute_force_solve_extended(&inst.with_split(s)).unwrap().is_some());
        assert_eq!(oracle.is_some(), split_yes, "seed {seed}: split semantics");
    }
}

/// Universal sets cover every partial pattern: for any target assignment of
/// red on up to r positions plus yellow/blue refinement on the vertex part,
/// some ordered pair realizes it.
#[test]
fn universal_pairs_realize_small_patterns() {
    let g = random_graph(3, 2, 99);
    let m = position_count(&g);
    for strategy in [UsetStrategy::Exhaustive, UsetStrategy::RandomVerified { seed: 21 }] {
        let u = build_universal_set(m, m.min(4), strategy).unwrap();
        assert!(verify_universal_set(&u).unwrap());
        let colorings: Vec<_> = colorings_from_universal_set(&g, &u).unwrap().collect();
        // Every full coloring of this tiny graph must appear when r = m.
        if u.r() == m {
            let mut distinct = BTreeSet::new();
            for c in &colorings {
                let key: Vec<String> = g
                    .vertices()
                    .map(|v| format!("{:?}", c.vertex_color(v)))
                    .chain(g.edges().iter().map(|&e| format!("{:?}", c.edge_color(e))))
                    .collect();
                distinct.insert(key);
            }
            let expected = 3usize.pow(g.vertex_count() as u32) * 2usize.pow(g.edge_count() as u32);
            assert_eq!(distinct.len(), expected);
        }
    }
}
