//! Small-graph corpora: exhaustive enumeration, isomorphism dedup, clique and
//! independent-set checks, and seeded random instance generators. Shared by
//! the test suites and the benchmark harness.

use crate::degree::DegreeSequence;
use crate::edit::{apply_edits, EditSet};
use crate::graph::{Edge, Graph};
use crate::instance::ExtendedInstance;
use crate::util::for_each_combination;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

/// All labeled graphs on vertices `1..=n`.
pub fn all_labeled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = pair_list(n);
    (0..(1u64 << pairs.len()))
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            Graph::from_edges(n, &edges)
        })
        .collect()
}

fn pair_list(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for u in 1..=n {
        for v in (u + 1)..=n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// Canonical form under vertex relabeling: the minimal adjacency bitmask over
/// all permutations. Exponential in `n`; meant for `n <= 8`.
pub fn canonical_code(g: &Graph) -> u64 {
    let vs: Vec<usize> = g.vertices().collect();
    let n = vs.len();
    assert!(n <= 8, "canonical form is only supported for up to 8 vertices");
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |p| {
        let mut code = 0u64;
        let mut bit = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if g.has_edge(vs[p[i]], vs[p[j]]) {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(code);
    });
    best
}

fn permute(items: &mut Vec<usize>, start: usize, f: &mut impl FnMut(&[usize])) {
    if start == items.len() {
        f(items);
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permute(items, start + 1, f);
        items.swap(start, i);
    }
}

/// One representative per isomorphism class.
pub fn dedupe_isomorphic(graphs: Vec<Graph>) -> Vec<Graph> {
    let mut seen = BTreeSet::new();
    graphs.into_iter().filter(|g| seen.insert(canonical_code(g))).collect()
}

/// Representatives of all connected regular graphs on exactly `n` vertices.
pub fn connected_regular_graphs(n: usize) -> Vec<Graph> {
    dedupe_isomorphic(
        all_labeled_graphs(n)
            .into_iter()
            .filter(|g| g.regular_degree().is_some() && g.is_connected())
            .collect(),
    )
}

/// True iff `g` has a clique on `k` vertices (every graph has a 0-clique).
pub fn has_clique(g: &Graph, k: usize) -> bool {
    let vs: Vec<usize> = g.vertices().collect();
    if k > vs.len() {
        return false;
    }
    !for_each_combination(vs.len(), k, &mut |idxs| {
        let all_adjacent = idxs
            .iter()
            .enumerate()
            .all(|(a, &i)| idxs[a + 1..].iter().all(|&j| g.has_edge(vs[i], vs[j])));
        !all_adjacent
    })
}

/// True iff `g` has an independent set on `k` vertices.
pub fn has_independent_set(g: &Graph, k: usize) -> bool {
    let vs: Vec<usize> = g.vertices().collect();
    if k > vs.len() {
        return false;
    }
    !for_each_combination(vs.len(), k, &mut |idxs| {
        let none_adjacent = idxs
            .iter()
            .enumerate()
            .all(|(a, &i)| idxs[a + 1..].iter().all(|&j| !g.has_edge(vs[i], vs[j])));
        !none_adjacent
    })
}

/// Uniform random graph on `1..=n` with exactly `edges` edges (capped at the
/// number of available pairs).
pub fn random_graph(n: usize, edges: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = pair_list(n);
    pairs.shuffle(&mut rng);
    let take = edges.min(pairs.len());
    Graph::from_edges(n, &pairs[..take])
}

/// Random graph with every degree at most `max_degree`; edges are attempted
/// in shuffled order until `edges` are placed or no pair fits.
pub fn random_graph_max_degree(n: usize, edges: usize, max_degree: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = pair_list(n);
    pairs.shuffle(&mut rng);
    let mut g = Graph::with_vertices(n);
    let mut placed = 0;
    for (u, v) in pairs {
        if placed == edges {
            break;
        }
        if g.degree(u) < max_degree && g.degree(v) < max_degree {
            g.add_edge(u, v);
            placed += 1;
        }
    }
    g
}

/// Random `d`-regular graph on `1..=n` via the pairing model with rejection.
/// Returns `None` when `n * d` is odd, `d >= n`, or sampling keeps failing.
pub fn random_regular_graph(n: usize, d: usize, seed: u64) -> Option<Graph> {
    if !(n * d).is_multiple_of(2) || d >= n {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..1000 {
        let mut stubs: Vec<usize> = (1..=n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
        stubs.shuffle(&mut rng);
        let mut g = Graph::with_vertices(n);
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || g.has_edge(u, v) {
                continue 'attempt;
            }
            g.add_edge(u, v);
        }
        return Some(g);
    }
    None
}

/// Random edit set with the exact given operation counts, keeping the edited
/// graph's maximum degree at most `max_degree`. `None` when the graph cannot
/// support the counts.
pub fn random_edit_set(
    g: &Graph,
    n_vd: usize,
    n_ed: usize,
    n_ea: usize,
    max_degree: usize,
    seed: u64,
) -> Option<EditSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut vertices: Vec<usize> = g.vertices().collect();
    if vertices.len() < n_vd {
        return None;
    }
    vertices.shuffle(&mut rng);
    let deleted_vertices: BTreeSet<usize> = vertices[..n_vd].iter().copied().collect();

    let mut survivor_edges: Vec<Edge> = g
        .edges()
        .into_iter()
        .filter(|e| {
            let (u, v) = e.endpoints();
            !deleted_vertices.contains(&u) && !deleted_vertices.contains(&v)
        })
        .collect();
    if survivor_edges.len() < n_ed {
        return None;
    }
    survivor_edges.shuffle(&mut rng);
    let deleted_edges: BTreeSet<Edge> = survivor_edges[..n_ed].iter().copied().collect();

    let edit_without_additions = EditSet {
        deleted_vertices: deleted_vertices.clone(),
        deleted_edges: deleted_edges.clone(),
        added_edges: BTreeSet::new(),
    };
    let intermediate = apply_edits(g, &edit_without_additions).ok()?;
    // Additions must be new pairs of the original graph, not rewired deletions.
    let mut candidates: Vec<Edge> =
        intermediate.non_edges().into_iter().filter(|e| !g.has_edge_e(*e)).collect();
    candidates.shuffle(&mut rng);
    let mut partial = intermediate;
    let mut added_edges = BTreeSet::new();
    for e in candidates {
        if added_edges.len() == n_ea {
            break;
        }
        let (u, v) = e.endpoints();
        if partial.degree(u) < max_degree && partial.degree(v) < max_degree {
            partial.add_edge(u, v);
            added_edges.insert(e);
        }
    }
    if added_edges.len() < n_ea {
        return None;
    }
    Some(EditSet { deleted_vertices, deleted_edges, added_edges })
}

/// The degree sequence reached from `g` by a random edit of the given sizes,
/// when one exists.
pub fn perturbed_sigma(
    g: &Graph,
    n_vd: usize,
    n_ed: usize,
    n_ea: usize,
    max_degree: usize,
    seed: u64,
) -> Option<DegreeSequence> {
    let edit = random_edit_set(g, n_vd, n_ed, n_ea, max_degree, seed)?;
    let edited = apply_edits(g, &edit).ok()?;
    Some(DegreeSequence::of_graph(&edited))
}

/// An instance built around a known solution.
#[derive(Clone, Debug)]
pub struct PlantedInstance {
    pub instance: ExtendedInstance,
    pub solution: EditSet,
}

/// Disjoint union of `t` copies of `base`.
fn graph_copies(base: &Graph, t: usize) -> Graph {
    let parts: Vec<&Graph> = std::iter::repeat_n(base, t).collect();
    Graph::disjoint_union(&parts).0
}

fn weighted_op_counts(rng: &mut ChaCha8Rng, total: usize, weights: [u32; 3]) -> [usize; 3] {
    let sum: u32 = weights.iter().sum();
    let mut counts = [0usize; 3];
    for _ in 0..total {
        let mut roll = rng.gen_range(0..sum);
        for (i, &w) in weights.iter().enumerate() {
            if roll < w {
                counts[i] += 1;
                break;
            }
            roll -= w;
        }
    }
    counts
}

/// Random instance with a planted solution: pick a graph, pick a valid edit
/// set, and set the target to the edited graph's degree sequence with budgets
/// matching the edit exactly.
///
/// Shapes lean on low-degree graphs and unions of identical components, where
/// equivalent solutions are plentiful; a minority of denser and generic
/// shapes keeps the corpus varied. Bounds: at most 30 vertices, 4 operations,
/// target maximum 6.
pub fn random_planted_instance(seed: u64) -> PlantedInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0u64.. {
        let attempt_seed = seed.wrapping_mul(1_000_003).wrapping_add(attempt);
        let shape = rng.gen_range(0..100u32);
        let (graph, total_ops, op_weights, addition_cap) = if shape < 20 {
            // Near-matchings with larger edits.
            let n = rng.gen_range(10..=30);
            let edges = rng.gen_range(n / 4..=n / 2);
            let g = random_graph_max_degree(n, edges, 2, attempt_seed);
            (g, *[2, 3, 3, 4].choose(&mut rng).unwrap(), [1, 1, 1], 2)
        } else if shape < 38 {
            // Low-degree generic: paths, cycles, matchings.
            let n = rng.gen_range(8..=30);
            let edges = rng.gen_range(n / 3..=2 * n / 3);
            let g = random_graph_max_degree(n, edges, 2, attempt_seed);
            (g, *[1, 1, 2, 2].choose(&mut rng).unwrap(), [1, 1, 1], 3)
        } else if shape < 70 {
            // Many copies of one small sparse component.
            let n0 = rng.gen_range(3..=5);
            let base_edges = rng.gen_range(n0 - 1..=n0 + 1);
            let base = random_graph_max_degree(n0, base_edges, 3, attempt_seed);
            let t = rng.gen_range(4..=30 / n0);
            (graph_copies(&base, t), *[1, 1, 2, 2].choose(&mut rng).unwrap(), [1, 3, 3], 3)
        } else if shape < 78 {
            // Copies of a moderately dense component; deletion-leaning edits.
            let n0 = rng.gen_range(4..=6);
            let base_edges = rng.gen_range(n0..=2 * n0);
            let base = random_graph_max_degree(n0, base_edges, 4, attempt_seed);
            let t = rng.gen_range(3..=30 / n0);
            (graph_copies(&base, t), 1, [1, 6, 3], 3)
        } else if shape < 82 {
            // Copies of a dense component; edge deletions only.
            let n0 = rng.gen_range(5..=6);
            let base_edges = rng.gen_range(2 * n0..=3 * n0);
            let base = random_graph_max_degree(n0, base_edges, 6, attempt_seed);
            let t = rng.gen_range(3..=30 / n0);
            (graph_copies(&base, t), 1, [0, 1, 0], 3)
        } else if shape < 92 {
            // Sparse generic.
            let n = rng.gen_range(6..=16);
            let edges = rng.gen_range(n / 2..=n);
            let g = random_graph_max_degree(n, edges, 3, attempt_seed);
            (g, *[1, 1, 2].choose(&mut rng).unwrap(), [1, 2, 2], 3)
        } else {
            // Tiny dense; edge-deletion-leaning edits.
            let n = rng.gen_range(4..=8);
            let edges = rng.gen_range(n..=2 * n);
            let g = random_graph_max_degree(n, edges, 6, attempt_seed);
            (g, 1, [1, 8, 2], 3)
        };

        let [n_vd, n_ed, n_ea] = weighted_op_counts(&mut rng, total_ops, op_weights);
        let Some(solution) =
            random_edit_set(&graph, n_vd, n_ed, n_ea, addition_cap, attempt_seed.wrapping_add(1))
        else {
            continue;
        };
        let Ok(edited) = apply_edits(&graph, &solution) else { continue };
        let sigma = DegreeSequence::of_graph(&edited);
        if sigma.max() > 6 {
            continue;
        }
        let instance = ExtendedInstance::new(graph, sigma, n_vd, n_ed, n_ea);
        debug_assert!(crate::instance::verify_solution_extended(&instance, &solution));
        return PlantedInstance { instance, solution };
    }
    unreachable!("planted instance generation always terminates")
}
