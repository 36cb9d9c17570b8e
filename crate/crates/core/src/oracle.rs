//! Exhaustive reference solver.
//!
//! Enumerates candidate edit sets outright and is therefore usable only on
//! small instances; every other solver in this crate is tested against it.
//! Results are deterministic: among all solutions the one with the fewest
//! operations is returned, ties broken by the canonical encoding of
//! [`EditSet`].

use crate::degree::{degree_vector_of_sequence, DegreeSequence};
use crate::edit::EditSet;
use crate::graph::{Edge, Graph};
use crate::instance::{check_solution, check_solution_extended, ExtendedInstance, Instance, Op};
use crate::util::{binomial, binomial_sum, for_each_combination};
use thiserror::Error;

/// Default bound on the number of candidate triples the oracle may visit.
pub const DEFAULT_ORACLE_CAP: u64 = 100_000_000;

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum OracleError {
    #[error("instance too large for oracle: ~{estimate} candidates exceed cap {cap}")]
    TooLarge { estimate: u128, cap: u64 },
}

#[derive(Clone, Copy, Debug)]
struct Budgets {
    kvd: usize,
    ked: usize,
    kea: usize,
    /// Cap on the total number of operations, if any.
    combined: Option<usize>,
}

impl Budgets {
    fn of_instance(inst: &Instance) -> Budgets {
        let k = inst.budget;
        Budgets {
            kvd: if inst.ops.contains(Op::VertexDeletion) { k } else { 0 },
            ked: if inst.ops.contains(Op::EdgeDeletion) { k } else { 0 },
            kea: if inst.ops.contains(Op::EdgeAddition) { k } else { 0 },
            combined: Some(k),
        }
    }

    fn of_extended(inst: &ExtendedInstance) -> Budgets {
        Budgets {
            kvd: inst.budget_vd,
            ked: inst.budget_ed,
            kea: inst.budget_ea,
            combined: None,
        }
    }

    fn max_total(&self) -> usize {
        let sum = self.kvd + self.ked + self.kea;
        self.combined.map_or(sum, |k| k.min(sum))
    }
}

/// Solves an [`Instance`] exhaustively with the default candidate cap.
pub fn brute_force_solve(inst: &Instance) -> Result<Option<EditSet>, OracleError> {
    brute_force_solve_with_cap(inst, DEFAULT_ORACLE_CAP)
}

pub fn brute_force_solve_with_cap(
    inst: &Instance,
    cap: u64,
) -> Result<Option<EditSet>, OracleError> {
    let solution = solve_min(&inst.graph, &inst.sigma, Budgets::of_instance(inst), cap)?;
    if let Some(e) = &solution {
        debug_assert!(check_solution(inst, e).is_ok());
    }
    Ok(solution)
}

/// Solves an [`ExtendedInstance`] exhaustively with the default candidate cap.
pub fn brute_force_solve_extended(
    inst: &ExtendedInstance,
) -> Result<Option<EditSet>, OracleError> {
    brute_force_solve_extended_with_cap(inst, DEFAULT_ORACLE_CAP)
}

pub fn brute_force_solve_extended_with_cap(
    inst: &ExtendedInstance,
    cap: u64,
) -> Result<Option<EditSet>, OracleError> {
    let solution = solve_min(&inst.graph, &inst.sigma, Budgets::of_extended(inst), cap)?;
    if let Some(e) = &solution {
        debug_assert!(check_solution_extended(inst, e).is_ok());
    }
    Ok(solution)
}

/// Counts distinct valid edit sets within the budgets, saturating at `cap`.
pub fn count_solutions(inst: &Instance, cap: u64) -> Result<u64, OracleError> {
    count_all(&inst.graph, &inst.sigma, Budgets::of_instance(inst), cap)
}

pub fn count_solutions_extended(inst: &ExtendedInstance, cap: u64) -> Result<u64, OracleError> {
    count_all(&inst.graph, &inst.sigma, Budgets::of_extended(inst), cap)
}

/// Loose overestimate of the number of candidate triples, for the size guard.
pub fn candidate_estimate(g: &Graph, b_vd: usize, b_ed: usize, b_ea: usize) -> u128 {
    let n = g.vertex_count();
    let m = g.edge_count();
    let non_edges = binomial(n, 2).saturating_sub(m as u128).min(u64::MAX as u128) as usize;
    binomial_sum(n, b_vd.min(n))
        .saturating_mul(binomial_sum(m, b_ed.min(m)))
        .saturating_mul(binomial_sum(non_edges, b_ea.min(non_edges)))
}

/// Rough feasibility test used by callers choosing between solver backends.
pub fn within_oracle_cap(g: &Graph, b_vd: usize, b_ed: usize, b_ea: usize, cap: u64) -> bool {
    candidate_estimate(g, b_vd, b_ed, b_ea) <= cap as u128
}

fn guard(g: &Graph, b: &Budgets, cap: u64) -> Result<(), OracleError> {
    let estimate = candidate_estimate(g, b.kvd, b.ked, b.kea);
    if estimate > cap as u128 {
        return Err(OracleError::TooLarge { estimate, cap });
    }
    Ok(())
}

/// Per-deletion-set working state: the surviving vertices with their current
/// degrees, plus edges and non-edges of the surviving graph as index pairs.
struct Survivors {
    ids: Vec<usize>,
    degs: Vec<usize>,
    edges: Vec<(usize, usize)>,
    non_edges: Vec<(usize, usize)>,
}

impl Survivors {
    fn build(g: &Graph, deleted: &[usize]) -> Survivors {
        let ids: Vec<usize> = g.vertices().filter(|v| !deleted.contains(v)).collect();
        let index_of = |v: usize| ids.binary_search(&v).unwrap();
        let degs = ids
            .iter()
            .map(|&v| g.neighbors(v).filter(|u| !deleted.contains(u)).count())
            .collect();
        let mut edges = Vec::new();
        let mut non_edges = Vec::new();
        for (i, &u) in ids.iter().enumerate() {
            for &v in &ids[i + 1..] {
                if g.has_edge(u, v) {
                    edges.push((i, index_of(v)));
                } else {
                    non_edges.push((i, index_of(v)));
                }
            }
        }
        Survivors { ids, degs, edges, non_edges }
    }

    fn sum_degrees(&self) -> usize {
        self.degs.iter().sum()
    }
}

/// Checks the current degrees against the target counts.
fn degrees_match(degs: &[usize], target: &[usize], buf: &mut Vec<usize>) -> bool {
    buf.clear();
    buf.resize(target.len(), 0);
    for &d in degs {
        if d >= target.len() {
            return false;
        }
        buf[d] += 1;
    }
    buf == target
}

/// L1 distance between current degree counts and the target, counting degrees
/// above the target range as unfixable.
fn l1_distance(degs: &[usize], target: &[usize], buf: &mut Vec<usize>) -> Option<usize> {
    buf.clear();
    buf.resize(target.len(), 0);
    for &d in degs {
        if d >= target.len() {
            return None;
        }
        buf[d] += 1;
    }
    Some(
        buf.iter()
            .zip(target)
            .map(|(&a, &b)| a.abs_diff(b))
            .sum(),
    )
}

/// Visits every candidate split `(deletion set, edge count b, addition count c)`
/// consistent with the instance arithmetic, calling `visit` with the survivor
/// state after edge deletions are enumerated one level down.
///
/// Returns `false` if the visitor aborted.
fn enumerate_candidates(
    g: &Graph,
    sigma: &DegreeSequence,
    budgets: &Budgets,
    exact_total: Option<usize>,
    visit: &mut impl FnMut(&[usize], &mut Survivors, usize, usize, &[usize]) -> bool,
) -> bool {
    let n = g.vertex_count();
    // Every valid edit leaves exactly |sigma| vertices, so the number of
    // deletions is forced.
    let Some(u_size) = n.checked_sub(sigma.len()) else {
        return true;
    };
    if u_size > budgets.kvd || exact_total.is_some_and(|t| u_size > t) {
        return true;
    }
    if u_size > budgets.combined.unwrap_or(usize::MAX) {
        return true;
    }
    let vertex_ids: Vec<usize> = g.vertices().collect();
    let target_sum = sigma.sum() as i64;
    let target = degree_vector_of_sequence(sigma);
    let target_counts = {
        let mut t = target.counts().to_vec();
        if t.is_empty() {
            t.push(0);
        }
        t
    };

    for_each_combination(n, u_size, &mut |idxs| {
        let deleted: Vec<usize> = idxs.iter().map(|&i| vertex_ids[i]).collect();
        let mut surv = Survivors::build(g, &deleted);
        // Each edge deletion lowers the degree sum by 2 and each addition
        // raises it by 2, so c - b is forced for this deletion set.
        let diff2 = target_sum - surv.sum_degrees() as i64;
        if diff2 % 2 != 0 {
            return true;
        }
        let diff = diff2 / 2;
        let max_b = budgets.ked.min(surv.edges.len());
        for b in 0..=max_b {
            let c = b as i64 + diff;
            if c < 0 {
                continue;
            }
            let c = c as usize;
            if c > budgets.kea.min(surv.non_edges.len()) {
                continue;
            }
            let total = u_size + b + c;
            if let Some(t) = exact_total {
                if total != t {
                    continue;
                }
            }
            if total > budgets.combined.unwrap_or(usize::MAX) {
                continue;
            }
            if !visit(&deleted, &mut surv, b, c, &target_counts) {
                return false;
            }
        }
        true
    })
}

/// Enumerates deletion subsets then addition subsets, maintaining degrees
/// incrementally; calls `leaf` whenever the degrees match the target.
fn scan_edges(
    surv: &mut Survivors,
    b: usize,
    c: usize,
    target_counts: &[usize],
    leaf: &mut impl FnMut(&[usize], &[(usize, usize)], &[(usize, usize)]) -> bool,
) -> bool {
    let edges = surv.edges.clone();
    let non_edges = surv.non_edges.clone();
    let mut chosen_d: Vec<(usize, usize)> = Vec::with_capacity(b);
    let mut buf: Vec<usize> = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn rec_add(
        non_edges: &[(usize, usize)],
        start: usize,
        left: usize,
        degs: &mut Vec<usize>,
        chosen_d: &[(usize, usize)],
        chosen_a: &mut Vec<(usize, usize)>,
        target_counts: &[usize],
        buf: &mut Vec<usize>,
        leaf: &mut impl FnMut(&[usize], &[(usize, usize)], &[(usize, usize)]) -> bool,
    ) -> bool {
        if left == 0 {
            if degrees_match(degs, target_counts, buf) {
                return leaf(degs, chosen_d, chosen_a);
            }
            return true;
        }
        if start + left > non_edges.len() {
            return true;
        }
        for i in start..=(non_edges.len() - left) {
            let (x, y) = non_edges[i];
            degs[x] += 1;
            degs[y] += 1;
            chosen_a.push((x, y));
            let go = rec_add(non_edges, i + 1, left - 1, degs, chosen_d, chosen_a, target_counts, buf, leaf);
            chosen_a.pop();
            degs[x] -= 1;
            degs[y] -= 1;
            if !go {
                return false;
            }
        }
        true
    }

    #[allow(clippy::too_many_arguments)]
    fn rec_del(
        edges: &[(usize, usize)],
        non_edges: &[(usize, usize)],
        start: usize,
        left: usize,
        c: usize,
        degs: &mut Vec<usize>,
        chosen_d: &mut Vec<(usize, usize)>,
        target_counts: &[usize],
        buf: &mut Vec<usize>,
        leaf: &mut impl FnMut(&[usize], &[(usize, usize)], &[(usize, usize)]) -> bool,
    ) -> bool {
        if left == 0 {
            // Additions can only raise degrees, and each one moves at most
            // four units of count mass; prune hopeless branches.
            match l1_distance(degs, target_counts, buf) {
                Some(dist) if dist <= 4 * c => {}
                _ => return true,
            }
            let mut chosen_a = Vec::with_capacity(c);
            return rec_add(non_edges, 0, c, degs, chosen_d, &mut chosen_a, target_counts, buf, leaf);
        }
        if start + left > edges.len() {
            return true;
        }
        for i in start..=(edges.len() - left) {
            let (x, y) = edges[i];
            degs[x] -= 1;
            degs[y] -= 1;
            chosen_d.push((x, y));
            let go = rec_del(edges, non_edges, i + 1, left - 1, c, degs, chosen_d, target_counts, buf, leaf);
            chosen_d.pop();
            degs[x] += 1;
            degs[y] += 1;
            if !go {
                return false;
            }
        }
        true
    }

    let mut degs = surv.degs.clone();
    rec_del(&edges, &non_edges, 0, b, c, &mut degs, &mut chosen_d, target_counts, &mut buf, leaf)
}

fn build_edit(
    deleted: &[usize],
    ids: &[usize],
    d: &[(usize, usize)],
    a: &[(usize, usize)],
) -> EditSet {
    EditSet {
        deleted_vertices: deleted.iter().copied().collect(),
        deleted_edges: d.iter().map(|&(i, j)| Edge::new(ids[i], ids[j])).collect(),
        added_edges: a.iter().map(|&(i, j)| Edge::new(ids[i], ids[j])).collect(),
    }
}

fn solve_min(
    g: &Graph,
    sigma: &DegreeSequence,
    budgets: Budgets,
    cap: u64,
) -> Result<Option<EditSet>, OracleError> {
    guard(g, &budgets, cap)?;
    for total in 0..=budgets.max_total() {
        let mut best: Option<EditSet> = None;
        enumerate_candidates(g, sigma, &budgets, Some(total), &mut |deleted, surv, b, c, target| {
            let ids = surv.ids.clone();
            scan_edges(surv, b, c, target, &mut |_, d, a| {
                let candidate = build_edit(deleted, &ids, d, a);
                if best.as_ref().is_none_or(|cur| candidate < *cur) {
                    best = Some(candidate);
                }
                true
            })
        });
        if best.is_some() {
            return Ok(best);
        }
    }
    Ok(None)
}

fn count_all(
    g: &Graph,
    sigma: &DegreeSequence,
    budgets: Budgets,
    cap: u64,
) -> Result<u64, OracleError> {
    guard(g, &budgets, DEFAULT_ORACLE_CAP)?;
    let mut count: u64 = 0;
    enumerate_candidates(g, sigma, &budgets, None, &mut |_, surv, b, c, target| {
        scan_edges(surv, b, c, target, &mut |_, _, _| {
            count += 1;
            count < cap
        })
    });
    Ok(count.min(cap))
}
