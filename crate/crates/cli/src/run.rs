//! Solver dispatch shared by the `solve` and `bench` commands.

use crate::format::ParsedInstance;
use degseq::oracle::{self, DEFAULT_ORACLE_CAP};
use degseq::separation::{self, default_trials};
use degseq::universal::MAX_EXHAUSTIVE_POSITIONS;
use degseq::EditSet;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SolveMode {
    Auto,
    Brute,
    Random,
    Derand,
}

impl fmt::Display for SolveMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolveMode::Auto => "auto",
            SolveMode::Brute => "brute",
            SolveMode::Random => "random",
            SolveMode::Derand => "derand",
        })
    }
}

impl FromStr for SolveMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "auto" => Ok(SolveMode::Auto),
            "brute" => Ok(SolveMode::Brute),
            "random" => Ok(SolveMode::Random),
            "derand" => Ok(SolveMode::Derand),
            other => Err(format!("unknown mode `{other}` (use auto, brute, random, derand)")),
        }
    }
}

/// Result of one solver run.
pub struct Outcome {
    pub solution: Option<EditSet>,
    /// False only for a randomized miss, which may be a false negative.
    pub exact: bool,
    pub mode_used: SolveMode,
    pub trials_run: Option<u64>,
}

fn op_budgets(inst: &ParsedInstance) -> (usize, usize, usize) {
    match inst {
        ParsedInstance::Simple(i) => {
            let k = i.budget;
            let b = |op| if i.ops.contains(op) { k } else { 0 };
            (
                b(degseq::Op::VertexDeletion),
                b(degseq::Op::EdgeDeletion),
                b(degseq::Op::EdgeAddition),
            )
        }
        ParsedInstance::Extended(i) => (i.budget_vd, i.budget_ed, i.budget_ea),
    }
}

fn total_budget(inst: &ParsedInstance) -> usize {
    match inst {
        ParsedInstance::Simple(i) => i.budget,
        ParsedInstance::Extended(i) => i.total_budget(),
    }
}

fn pick_mode(inst: &ParsedInstance) -> SolveMode {
    let g = inst.graph();
    let (bvd, bed, bea) = op_budgets(inst);
    if oracle::within_oracle_cap(g, bvd, bed, bea, DEFAULT_ORACLE_CAP) {
        SolveMode::Brute
    } else if g.vertex_count() + g.edge_count() <= MAX_EXHAUSTIVE_POSITIONS {
        SolveMode::Derand
    } else {
        SolveMode::Random
    }
}

/// Runs the selected solver. `trials` only applies to the randomized mode and
/// defaults to the certified count capped at the usual trial cap.
pub fn solve(
    inst: &ParsedInstance,
    mode: SolveMode,
    trials: Option<u64>,
    seed: u64,
) -> Result<Outcome, String> {
    let mode = match mode {
        SolveMode::Auto => pick_mode(inst),
        m => m,
    };
    match mode {
        SolveMode::Auto => unreachable!(),
        SolveMode::Brute => {
            let solution = match inst {
                ParsedInstance::Simple(i) => oracle::brute_force_solve(i),
                ParsedInstance::Extended(i) => oracle::brute_force_solve_extended(i),
            }
            .map_err(|e| e.to_string())?;
            Ok(Outcome { solution, exact: true, mode_used: mode, trials_run: None })
        }
        SolveMode::Derand => {
            let solution = match inst {
                ParsedInstance::Simple(i) => separation::solve_derandomized(i),
                ParsedInstance::Extended(i) => separation::solve_derandomized_extended(i),
            }
            .map_err(|e| e.to_string())?;
            Ok(Outcome { solution, exact: true, mode_used: mode, trials_run: None })
        }
        SolveMode::Random => {
            let trials = trials.unwrap_or_else(|| {
                default_trials(total_budget(inst) as u64, inst.sigma().max() as u64)
            });
            let res = match inst {
                ParsedInstance::Simple(i) => separation::solve_randomized(i, trials, seed),
                ParsedInstance::Extended(i) => {
                    separation::solve_randomized_extended(i, trials, seed)
                }
            };
            Ok(Outcome {
                solution: res.solution,
                exact: res.exact,
                mode_used: mode,
                trials_run: Some(res.trials_run),
            })
        }
    }
}
