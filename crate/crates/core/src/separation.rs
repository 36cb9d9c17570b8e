//! Random-separation solver.
//!
//! Vertices are colored red/yellow/blue and edges red/blue. The red and
//! yellow elements mark a candidate solution: red vertices get deleted, red
//! edges get deleted, and added edges run between yellow vertices. The edges
//! that are red, incident to a red vertex, or joining two yellow vertices
//! form the selected subgraph; a dynamic program walks its connected
//! components and decides, per component, whether to take its red and yellow
//! material into the partial solution. The DP is sound for every coloring and
//! complete for colorings that match a solution, which is what the randomized
//! and derandomized drivers exploit.

use crate::degree::{
    degree_vector, degree_vector_of_sequence, vectors_equal_padded, DegreeVector,
};
use crate::edit::EditSet;
use crate::graph::{Edge, Graph};
use crate::instance::{check_solution, check_solution_extended, ExtendedInstance, Instance};
use crate::preprocess::{apply_vertex_deletion_rule, PreprocessOutcome};
use crate::universal::MAX_EXHAUSTIVE_POSITIONS;
use crate::util::{for_each_combination, mix_seed};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VertexColor {
    Red,
    Yellow,
    Blue,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EdgeColor {
    Red,
    Blue,
}

/// A total coloring of a graph's vertices (three colors) and edges (two).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coloring {
    vertices: BTreeMap<usize, VertexColor>,
    edges: BTreeMap<Edge, EdgeColor>,
}

impl Coloring {
    /// Everything blue.
    pub fn all_blue(g: &Graph) -> Coloring {
        Coloring {
            vertices: g.vertices().map(|v| (v, VertexColor::Blue)).collect(),
            edges: g.edges().into_iter().map(|e| (e, EdgeColor::Blue)).collect(),
        }
    }

    pub fn set_vertex(&mut self, v: usize, c: VertexColor) {
        assert!(self.vertices.contains_key(&v), "unknown vertex {v}");
        self.vertices.insert(v, c);
    }

    pub fn set_edge(&mut self, e: Edge, c: EdgeColor) {
        assert!(self.edges.contains_key(&e), "unknown edge {e}");
        self.edges.insert(e, c);
    }

    pub fn vertex_color(&self, v: usize) -> VertexColor {
        self.vertices[&v]
    }

    pub fn edge_color(&self, e: Edge) -> EdgeColor {
        self.edges[&e]
    }

    /// True when the coloring covers exactly the vertices and edges of `g`.
    pub fn covers(&self, g: &Graph) -> bool {
        self.vertices.len() == g.vertex_count()
            && self.edges.len() == g.edge_count()
            && g.vertices().all(|v| self.vertices.contains_key(&v))
            && g.edges().iter().all(|e| self.edges.contains_key(e))
    }

    pub fn vertex_count_of(&self, c: VertexColor) -> usize {
        self.vertices.values().filter(|&&x| x == c).count()
    }

    pub fn edge_count_of(&self, c: EdgeColor) -> usize {
        self.edges.values().filter(|&&x| x == c).count()
    }
}

/// Colors vertices and edges independently and uniformly at random;
/// deterministic for a fixed seed.
pub fn random_coloring(g: &Graph, seed: u64) -> Coloring {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vertices = g
        .vertices()
        .map(|v| {
            let c = match rng.gen_range(0..3u8) {
                0 => VertexColor::Red,
                1 => VertexColor::Yellow,
                _ => VertexColor::Blue,
            };
            (v, c)
        })
        .collect();
    let edges = g
        .edges()
        .into_iter()
        .map(|e| {
            let c = if rng.gen_range(0..2u8) == 0 { EdgeColor::Red } else { EdgeColor::Blue };
            (e, c)
        })
        .collect();
    Coloring { vertices, edges }
}

/// The coloring that makes `e` findable: deleted vertices red, endpoints of
/// added edges yellow, deleted edges red, everything else blue.
pub fn planted_coloring(g: &Graph, e: &EditSet) -> Coloring {
    let mut c = Coloring::all_blue(g);
    for &v in &e.deleted_vertices {
        c.set_vertex(v, VertexColor::Red);
    }
    for a in &e.added_edges {
        let (u, v) = a.endpoints();
        c.set_vertex(u, VertexColor::Yellow);
        c.set_vertex(v, VertexColor::Yellow);
    }
    for &d in &e.deleted_edges {
        c.set_edge(d, EdgeColor::Red);
    }
    c
}

/// One connected component of the selected subgraph, with its colored
/// material split out.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeparationComponent {
    pub vertices: Vec<usize>,
    pub red_vertices: Vec<usize>,
    pub yellow_vertices: Vec<usize>,
    pub red_edges: Vec<Edge>,
    pub edges: Vec<Edge>,
}

impl SeparationComponent {
    fn singleton(v: usize, color: VertexColor) -> SeparationComponent {
        SeparationComponent {
            vertices: vec![v],
            red_vertices: if color == VertexColor::Red { vec![v] } else { vec![] },
            yellow_vertices: if color == VertexColor::Yellow { vec![v] } else { vec![] },
            red_edges: vec![],
            edges: vec![],
        }
    }
}

/// The selected edge set and its components.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeparationGraph {
    pub selected_edges: BTreeSet<Edge>,
    pub components: Vec<SeparationComponent>,
}

/// An edge is selected when it is red, incident to a red vertex, or joins two
/// yellow vertices.
fn edge_selected(c: &Coloring, e: Edge) -> bool {
    let (u, v) = e.endpoints();
    c.edge_color(e) == EdgeColor::Red
        || c.vertex_color(u) == VertexColor::Red
        || c.vertex_color(v) == VertexColor::Red
        || (c.vertex_color(u) == VertexColor::Yellow && c.vertex_color(v) == VertexColor::Yellow)
}

/// Builds the selected subgraph and its components, ordered by smallest
/// contained vertex id.
pub fn build_separation_graph(g: &Graph, c: &Coloring) -> SeparationGraph {
    debug_assert!(c.covers(g));
    let selected: BTreeSet<Edge> = g.edges().into_iter().filter(|&e| edge_selected(c, e)).collect();

    // Union-find over the endpoints of selected edges.
    let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
    fn find(parent: &mut BTreeMap<usize, usize>, v: usize) -> usize {
        let p = parent[&v];
        if p == v {
            return v;
        }
        let root = find(parent, p);
        parent.insert(v, root);
        root
    }
    for e in &selected {
        let (u, v) = e.endpoints();
        parent.entry(u).or_insert(u);
        parent.entry(v).or_insert(v);
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent.insert(ru.max(rv), ru.min(rv));
        }
    }

    let mut by_root: BTreeMap<usize, SeparationComponent> = BTreeMap::new();
    let members: Vec<usize> = parent.keys().copied().collect();
    for v in members {
        let root = find(&mut parent, v);
        let comp = by_root.entry(root).or_insert_with(|| SeparationComponent {
            vertices: vec![],
            red_vertices: vec![],
            yellow_vertices: vec![],
            red_edges: vec![],
            edges: vec![],
        });
        comp.vertices.push(v);
        match c.vertex_color(v) {
            VertexColor::Red => comp.red_vertices.push(v),
            VertexColor::Yellow => comp.yellow_vertices.push(v),
            VertexColor::Blue => {}
        }
    }
    for &e in &selected {
        let root = find(&mut parent, e.endpoints().0);
        let comp = by_root.get_mut(&root).unwrap();
        comp.edges.push(e);
        if c.edge_color(e) == EdgeColor::Red {
            comp.red_edges.push(e);
        }
    }

    // BTreeMap order over roots is already by smallest contained vertex.
    SeparationGraph { selected_edges: selected, components: by_root.into_values().collect() }
}

/// Components the DP walks: the components of the selected subgraph plus one
/// singleton per red or yellow vertex that does not touch any selected edge.
/// Such vertices carry solution material (a deletion, or an endpoint of an
/// addition between otherwise untouched vertices) that the edge-induced
/// components cannot express.
pub fn dp_components(g: &Graph, c: &Coloring, sep: &SeparationGraph) -> Vec<SeparationComponent> {
    let covered: BTreeSet<usize> =
        sep.components.iter().flat_map(|comp| comp.vertices.iter().copied()).collect();
    let mut comps = sep.components.clone();
    for v in g.vertices() {
        if covered.contains(&v) {
            continue;
        }
        match c.vertex_color(v) {
            VertexColor::Red | VertexColor::Yellow => {
                comps.push(SeparationComponent::singleton(v, c.vertex_color(v)));
            }
            VertexColor::Blue => {}
        }
    }
    comps.sort_by_key(|comp| comp.vertices[0]);
    comps
}

/// Table key of a partial solution: operation counts, the degree multiset of
/// the selected yellow vertices, and the degree vector of the edited graph.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct DpKey {
    pub used_vd: usize,
    pub used_ed: usize,
    pub used_ea: usize,
    /// Sorted multiset of current degrees of all selected yellow vertices.
    pub yellow_degrees: Vec<usize>,
    /// Degree vector of the edited graph, padded to a fixed length.
    pub delta: Vec<usize>,
}

/// Witness of a partial solution.
#[derive(Clone, Debug)]
pub struct DpWitness {
    pub edit: EditSet,
    /// Indices of the selected components, ascending.
    pub selected: Vec<usize>,
    /// Selected yellow vertices in selection order; addition edges to later
    /// components are enumerated against these concrete ids.
    pub yellows: Vec<usize>,
    /// The edited graph for this partial solution.
    pub graph: Graph,
}

/// The component list and final table of one DP run, for inspection.
#[derive(Clone, Debug)]
pub struct DpRun {
    pub components: Vec<SeparationComponent>,
    pub final_table: BTreeMap<DpKey, DpWitness>,
}

fn pad_counts(v: &DegreeVector, len: usize) -> Vec<usize> {
    let mut counts = v.counts().to_vec();
    counts.resize(len.max(counts.len()), 0);
    counts
}

/// Runs the component DP and returns every record of the final table.
pub fn dp_tables(inst: &ExtendedInstance, coloring: &Coloring) -> DpRun {
    let g = &inst.graph;
    debug_assert!(coloring.covers(g));
    let delta_max = inst.sigma.max();
    let delta_len = delta_max.max(g.max_degree()) + 1;
    let sep = build_separation_graph(g, coloring);
    let components = dp_components(g, coloring, &sep);

    let mut table: BTreeMap<DpKey, DpWitness> = BTreeMap::new();
    table.insert(
        DpKey {
            used_vd: 0,
            used_ed: 0,
            used_ea: 0,
            yellow_degrees: vec![],
            delta: pad_counts(&degree_vector(g), delta_len),
        },
        DpWitness { edit: EditSet::empty(), selected: vec![], yellows: vec![], graph: g.clone() },
    );

    for (ci, comp) in components.iter().enumerate() {
        // A red edge with a red endpoint cannot be both deleted as an edge and
        // lose that endpoint; no valid selection contains such a component.
        let conflicted = comp.red_edges.iter().any(|e| {
            let (u, v) = e.endpoints();
            comp.red_vertices.contains(&u) || comp.red_vertices.contains(&v)
        });
        if conflicted {
            continue;
        }

        let snapshot: Vec<(DpKey, DpWitness)> =
            table.iter().map(|(k, w)| (k.clone(), w.clone())).collect();
        for (key, wit) in &snapshot {
            if key.used_vd + comp.red_vertices.len() > inst.budget_vd
                || key.used_ed + comp.red_edges.len() > inst.budget_ed
                || key.yellow_degrees.len() + comp.yellow_vertices.len() > 2 * inst.budget_ea
            {
                continue;
            }

            // The partial graph with this component's red material removed.
            let mut f = wit.graph.clone();
            for &v in &comp.red_vertices {
                f.remove_vertex(v);
            }
            for &e in &comp.red_edges {
                f.remove_edge(e);
            }

            // Candidate additions: pairs inside this component's yellows that
            // are not graph edges, and pairs towards previously selected
            // yellows. Yellow vertices of distinct components are never
            // adjacent, so the cross pairs are always addable.
            let ys = &comp.yellow_vertices;
            let mut candidates: Vec<Edge> = Vec::new();
            for (i, &y1) in ys.iter().enumerate() {
                for &y2 in &ys[i + 1..] {
                    if !g.has_edge(y1, y2) && !f.has_edge(y1, y2) {
                        candidates.push(Edge::new(y1, y2));
                    }
                }
            }
            for &x in &wit.yellows {
                for &y in ys {
                    debug_assert!(
                        !g.has_edge(x, y),
                        "yellow vertices of distinct components must not be adjacent"
                    );
                    debug_assert!(!f.has_edge(x, y));
                    candidates.push(Edge::new(x, y));
                }
            }

            let max_new = inst.budget_ea - key.used_ea;
            for count in 0..=max_new.min(candidates.len()) {
                for_each_combination(candidates.len(), count, &mut |idxs| {
                    extend_record(
                        delta_max, delta_len, &mut table, key, wit, ci, comp, &f,
                        candidates.as_slice(), idxs,
                    );
                    true
                });
            }
        }
    }

    DpRun { components, final_table: table }
}

/// Builds and inserts the record for one `(component, additions)` choice,
/// unless an addition pushes a yellow vertex above the target maximum degree
/// or the key is already present (first write wins).
#[allow(clippy::too_many_arguments)]
fn extend_record(
    delta_max: usize,
    delta_len: usize,
    table: &mut BTreeMap<DpKey, DpWitness>,
    key: &DpKey,
    wit: &DpWitness,
    ci: usize,
    comp: &SeparationComponent,
    f: &Graph,
    candidates: &[Edge],
    chosen: &[usize],
) {
    let mut increments: BTreeMap<usize, usize> = BTreeMap::new();
    for &i in chosen {
        let (u, v) = candidates[i].endpoints();
        *increments.entry(u).or_insert(0) += 1;
        *increments.entry(v).or_insert(0) += 1;
    }

    let mut yellow_degrees = Vec::with_capacity(wit.yellows.len() + comp.yellow_vertices.len());
    for &y in wit.yellows.iter().chain(comp.yellow_vertices.iter()) {
        let d = f.degree(y) + increments.get(&y).copied().unwrap_or(0);
        if d > delta_max {
            return;
        }
        yellow_degrees.push(d);
    }
    yellow_degrees.sort_unstable();

    let mut graph = f.clone();
    for &i in chosen {
        let (u, v) = candidates[i].endpoints();
        graph.add_edge(u, v);
    }

    let new_key = DpKey {
        used_vd: key.used_vd + comp.red_vertices.len(),
        used_ed: key.used_ed + comp.red_edges.len(),
        used_ea: key.used_ea + chosen.len(),
        yellow_degrees,
        delta: pad_counts(&degree_vector(&graph), delta_len),
    };
    if table.contains_key(&new_key) {
        return;
    }

    let mut edit = wit.edit.clone();
    edit.deleted_vertices.extend(comp.red_vertices.iter().copied());
    edit.deleted_edges.extend(comp.red_edges.iter().copied());
    edit.added_edges.extend(chosen.iter().map(|&i| candidates[i]));
    let mut selected = wit.selected.clone();
    selected.push(ci);
    let mut yellows = wit.yellows.clone();
    yellows.extend(comp.yellow_vertices.iter().copied());

    debug_assert_eq!(new_key.used_vd, edit.deleted_vertices.len());
    debug_assert_eq!(new_key.used_ed, edit.deleted_edges.len());
    debug_assert_eq!(new_key.used_ea, edit.added_edges.len());

    table.insert(new_key, DpWitness { edit, selected, yellows, graph });
}

/// Runs the component DP for one coloring and returns a verified solution if
/// any final record matches the target degree vector.
pub fn dp_solve_colored(inst: &ExtendedInstance, coloring: &Coloring) -> Option<EditSet> {
    let run = dp_tables(inst, coloring);
    let target = degree_vector_of_sequence(&inst.sigma);
    for (key, wit) in &run.final_table {
        if vectors_equal_padded(&DegreeVector::new(key.delta.clone()), &target)
            && check_solution_extended(inst, &wit.edit).is_ok()
        {
            return Some(wit.edit.clone());
        }
    }
    None
}

/// Number of random colorings after which a fruitless search certifies a
/// constant failure probability: `6^(2k(delta+k)^2)`.
pub fn required_trials(k: u64, delta: u64) -> BigUint {
    let dk = delta as u128 + k as u128;
    let exponent = 2 * k as u128 * dk * dk;
    let exponent =
        u32::try_from(exponent).expect("trial-count exponent exceeds practical range");
    BigUint::from(6u32).pow(exponent)
}

/// Number of coloring-relevant positions to cover when derandomizing:
/// `4k(delta+k)^2`.
pub fn required_r(k: u64, delta: u64) -> BigUint {
    let dk = BigUint::from(delta) + BigUint::from(k);
    BigUint::from(4u32) * BigUint::from(k) * &dk * &dk
}

/// Default trial budget: the certified count, capped.
pub const DEFAULT_TRIAL_CAP: u64 = 100_000;

pub fn default_trials(k: u64, delta: u64) -> u64 {
    required_trials(k, delta).min(BigUint::from(DEFAULT_TRIAL_CAP)).try_into().unwrap_or(DEFAULT_TRIAL_CAP)
}

/// Outcome of the randomized driver. A `None` solution with `exact == false`
/// may be a false negative.
#[derive(Clone, Debug)]
pub struct RandomizedResult {
    pub solution: Option<EditSet>,
    /// True when the answer is certain: a verified solution, or infeasibility
    /// proved by preprocessing alone.
    pub exact: bool,
    pub trials_run: u64,
}

/// Errors of the derandomized driver.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum SolveError {
    #[error("parameters exceed derandomization cap: m = {m} vertex+edge positions (cap {cap}), r = {r}")]
    DerandomizationCap { m: usize, r: BigUint, cap: usize },
}

fn lift(forced: &[usize], mut sol: EditSet) -> EditSet {
    sol.deleted_vertices.extend(forced.iter().copied());
    sol
}

/// Preprocesses and then tries random colorings, one per trial. Returns the
/// first verified solution. A miss is one-sided evidence only.
pub fn solve_randomized_extended(
    inst: &ExtendedInstance,
    trials: u64,
    seed: u64,
) -> RandomizedResult {
    let (reduced, forced) = match apply_vertex_deletion_rule(inst) {
        PreprocessOutcome::No => {
            return RandomizedResult { solution: None, exact: true, trials_run: 0 }
        }
        PreprocessOutcome::Reduced { instance, forced_deletions } => (instance, forced_deletions),
    };
    for trial in 0..trials {
        let coloring = random_coloring(&reduced.graph, mix_seed(seed, trial));
        if let Some(sol) = dp_solve_colored(&reduced, &coloring) {
            let lifted = lift(&forced, sol);
            if check_solution_extended(inst, &lifted).is_ok() {
                return RandomizedResult {
                    solution: Some(lifted),
                    exact: true,
                    trials_run: trial + 1,
                };
            }
        }
    }
    RandomizedResult { solution: None, exact: false, trials_run: trials }
}

/// Randomized driver for combined-budget instances: preprocesses every budget
/// split and round-robins trials across the feasible ones.
pub fn solve_randomized(inst: &Instance, trials: u64, seed: u64) -> RandomizedResult {
    let mut splits = Vec::new();
    for split in inst.budget_splits() {
        let ext = inst.with_split(split);
        if let PreprocessOutcome::Reduced { instance, forced_deletions } =
            apply_vertex_deletion_rule(&ext)
        {
            splits.push((instance, forced_deletions));
        }
    }
    if splits.is_empty() {
        return RandomizedResult { solution: None, exact: true, trials_run: 0 };
    }
    let width = splits.len() as u64;
    for trial in 0..trials {
        for (si, (reduced, forced)) in splits.iter().enumerate() {
            let stream = mix_seed(seed, trial * width + si as u64);
            let coloring = random_coloring(&reduced.graph, stream);
            if let Some(sol) = dp_solve_colored(reduced, &coloring) {
                let lifted = lift(forced, sol);
                if check_solution(inst, &lifted).is_ok() {
                    return RandomizedResult {
                        solution: Some(lifted),
                        exact: true,
                        trials_run: trial + 1,
                    };
                }
            }
        }
    }
    RandomizedResult { solution: None, exact: false, trials_run: trials }
}

/// Enumerates every coloring with at most `max_red_v` red vertices,
/// `max_red_e` red edges, and `max_yellow` yellow vertices, in ascending
/// size order. Stops early when `f` returns false.
fn for_each_bounded_coloring(
    g: &Graph,
    max_red_v: usize,
    max_red_e: usize,
    max_yellow: usize,
    f: &mut impl FnMut(&Coloring) -> bool,
) -> bool {
    let vertices: Vec<usize> = g.vertices().collect();
    let edges: Vec<Edge> = g.edges();
    let base = Coloring::all_blue(g);
    for rv_count in 0..=max_red_v.min(vertices.len()) {
        let go = for_each_combination(vertices.len(), rv_count, &mut |rv| {
            let remaining: Vec<usize> = (0..vertices.len()).filter(|i| !rv.contains(i)).collect();
            for re_count in 0..=max_red_e.min(edges.len()) {
                let go = for_each_combination(edges.len(), re_count, &mut |re| {
                    for y_count in 0..=max_yellow.min(remaining.len()) {
                        let go = for_each_combination(remaining.len(), y_count, &mut |ys| {
                            let mut c = base.clone();
                            for &i in rv {
                                c.set_vertex(vertices[i], VertexColor::Red);
                            }
                            for &i in re {
                                c.set_edge(edges[i], EdgeColor::Red);
                            }
                            for &i in ys {
                                c.set_vertex(vertices[remaining[i]], VertexColor::Yellow);
                            }
                            f(&c)
                        });
                        if !go {
                            return false;
                        }
                    }
                    true
                });
                if !go {
                    return false;
                }
            }
            true
        });
        if !go {
            return false;
        }
    }
    true
}

/// Exact decision for one extended instance via a deterministic coloring
/// sweep.
///
/// Only colorings whose red and yellow material fits the budgets can carry a
/// colorful solution base, and whenever any solution exists its planted
/// coloring is such a coloring; sweeping exactly that family is therefore
/// decision-equivalent to sweeping all colorings induced by an exhaustive
/// universal-set family, at a fraction of the cost.
pub fn solve_derandomized_extended(inst: &ExtendedInstance) -> Result<Option<EditSet>, SolveError> {
    check_derand_cap(
        &inst.graph,
        (inst.total_budget()) as u64,
        inst.sigma.max() as u64,
    )?;
    let (reduced, forced) = match apply_vertex_deletion_rule(inst) {
        PreprocessOutcome::No => return Ok(None),
        PreprocessOutcome::Reduced { instance, forced_deletions } => (instance, forced_deletions),
    };
    let mut found: Option<EditSet> = None;
    for_each_bounded_coloring(
        &reduced.graph,
        reduced.budget_vd,
        reduced.budget_ed,
        2 * reduced.budget_ea,
        &mut |coloring| {
            if let Some(sol) = dp_solve_colored(&reduced, coloring) {
                let lifted = lift(&forced, sol);
                if check_solution_extended(inst, &lifted).is_ok() {
                    found = Some(lifted);
                    return false;
                }
            }
            true
        },
    );
    Ok(found)
}

/// Exact decision for combined-budget instances: sweeps every budget split.
pub fn solve_derandomized(inst: &Instance) -> Result<Option<EditSet>, SolveError> {
    check_derand_cap(&inst.graph, inst.budget as u64, inst.sigma.max() as u64)?;
    for split in inst.budget_splits() {
        let ext = inst.with_split(split);
        if let Some(sol) = solve_derandomized_extended(&ext)? {
            debug_assert!(check_solution(inst, &sol).is_ok());
            return Ok(Some(sol));
        }
    }
    Ok(None)
}

fn check_derand_cap(g: &Graph, k: u64, delta: u64) -> Result<(), SolveError> {
    let m = g.vertex_count() + g.edge_count();
    if m > MAX_EXHAUSTIVE_POSITIONS {
        let r = required_r(k, delta).min(BigUint::from(m));
        return Err(SolveError::DerandomizationCap { m, r, cap: MAX_EXHAUSTIVE_POSITIONS });
    }
    Ok(())
}
