//! Exact decision-and-search solvers for editing a graph to a target degree
//! sequence with vertex deletions, edge deletions, and edge additions under
//! per-operation or combined budgets.
//!
//! The crate provides:
//!
//! - [`graph`], [`degree`], [`edit`], [`instance`]: the shared value types
//!   and the solution checker;
//! - [`oracle`]: an exhaustive reference solver for small instances;
//! - [`preprocess`]: the safe high-degree vertex reduction;
//! - [`separation`]: coloring-based search, with randomized and exact
//!   deterministic drivers;
//! - [`universal`]: universal sets of binary vectors backing derandomization;
//! - [`kernel`]: the edge-addition kernelization;
//! - [`reductions`]: instance generators from clique and independent set;
//! - [`corpus`]: small-graph enumeration and seeded random instances.

#![forbid(unsafe_code)]

pub mod corpus;
pub mod degree;
pub mod edit;
pub mod graph;
pub mod instance;
pub mod kernel;
pub mod oracle;
pub mod preprocess;
pub mod reductions;
pub mod separation;
pub mod universal;
mod util;

pub use degree::{degree_vector, degree_vector_of_sequence, vectors_equal_padded, DegreeSequence, DegreeVector};
pub use edit::{apply_edits, EditError, EditSet};
pub use graph::{Edge, Graph};
pub use instance::{
    check_solution, check_solution_extended, verify_solution, verify_solution_extended,
    ExtendedInstance, Instance, Op, OpSet, SolutionError,
};
pub use kernel::{kernelize_edge_addition, lift_kernel_solution, KernelOutcome, KernelResult};
pub use oracle::{brute_force_solve, brute_force_solve_extended, count_solutions, count_solutions_extended, OracleError};
pub use preprocess::{apply_vertex_deletion_rule, PreprocessOutcome};
pub use separation::{
    build_separation_graph, dp_solve_colored, planted_coloring, random_coloring, required_r,
    required_trials, solve_derandomized, solve_derandomized_extended, solve_randomized,
    solve_randomized_extended, Coloring, RandomizedResult, SolveError,
};
pub use universal::{
    build_universal_set, colorings_from_universal_set, verify_universal_set, Strategy,
    UniversalSet, UniversalSetError,
};
pub use util::{fnv1a64, mix_seed};
