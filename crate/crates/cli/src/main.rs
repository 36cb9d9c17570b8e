//! `degseq`: solve, verify, kernelize, generate, and benchmark instances of
//! degree-sequence editing.
//!
//! Exit codes: 0 decided/valid, 1 error or invalid solution, 2 randomized
//! search exhausted without a certificate (possible false negative).

use clap::{Parser, Subcommand};
use degseq::instance::{check_solution, check_solution_extended};
use degseq::kernel::{kernelize_edge_addition, KernelOutcome};
use degseq::reductions::{
    cross_compose_edge_deletion, cross_compose_vertex_deletion, reduce_clique_edge_deletion,
    reduce_clique_vertex_deletion, reduce_independent_set_edge_addition, Provenance,
};
use degseq::{Graph, Instance};
use degseq_cli::bench::{run_bench, BenchConfig, BenchFamily};
use degseq_cli::format::{
    format_instance, format_solution, parse_graph, parse_instance, renumber, ParsedInstance,
};
use degseq_cli::run::{solve, SolveMode};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const DEFAULT_SEED: u64 = 0x5eed_0001;

#[derive(Parser)]
#[command(name = "degseq", version, about = "Edit graphs to a target degree sequence")]
struct Cli {
    /// Seed for every randomized component.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide an instance and print a solution block or NO.
    Solve {
        /// Instance file.
        file: PathBuf,
        /// auto, brute, random, or derand.
        #[arg(long, default_value = "auto")]
        mode: SolveMode,
        /// Trial budget for the randomized mode.
        #[arg(long)]
        trials: Option<u64>,
    },
    /// Check a solution file against an instance file.
    Verify {
        instance: PathBuf,
        solution: PathBuf,
    },
    /// Kernelize an edge-addition instance.
    Kernelize {
        file: PathBuf,
        /// Write the kernel instance here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Write the kernel-to-original vertex map here.
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Generate instances from clique / independent-set problems.
    Generate {
        /// clique-ed, is-ea, clique-vd, cross-ed, or cross-vd.
        family: String,
        /// Source graph: a file path or a builtin (k5, c6, path4, star3).
        #[arg(long = "graph", required = true)]
        graphs: Vec<String>,
        /// Source-problem parameter.
        #[arg(long)]
        k: usize,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Write the derived-vertex mapping here.
        #[arg(long)]
        provenance: Option<PathBuf>,
    },
    /// Time solver runs over a generated family.
    Bench {
        /// cross-ed or cross-vd.
        #[arg(long, default_value = "cross-ed")]
        family: BenchFamily,
        /// Comma-separated copy counts.
        #[arg(long, default_value = "1,2,4", value_delimiter = ',')]
        t: Vec<usize>,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 4)]
        base_n: usize,
        #[arg(long, default_value_t = 3)]
        base_d: usize,
        #[arg(long, default_value_t = 11)]
        reps: u32,
        #[arg(long, default_value = "auto")]
        mode: SolveMode,
    },
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_or_print(path: Option<&Path>, text: &str) -> Result<(), String> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn builtin_graph(name: &str) -> Option<Graph> {
    let (kind, count) = name.split_at(name.find(|c: char| c.is_ascii_digit())?);
    let n: usize = count.parse().ok()?;
    match kind {
        "k" => Some(Graph::complete(n)),
        "c" if n >= 3 => Some(Graph::cycle(n)),
        "path" => Some(Graph::path(n)),
        "star" => Some(Graph::star(n)),
        _ => None,
    }
}

fn load_graph(spec: &str) -> Result<Graph, String> {
    if let Some(g) = builtin_graph(spec) {
        return Ok(g);
    }
    parse_graph(&read(Path::new(spec))?).map_err(|e| format!("{spec}: {e}"))
}

fn cmd_solve(file: &Path, mode: SolveMode, trials: Option<u64>, seed: u64) -> Result<u8, String> {
    let inst = parse_instance(&read(file)?).map_err(|e| e.to_string())?;
    let outcome = solve(&inst, mode, trials, seed)?;
    println!("# mode {}", outcome.mode_used);
    if let Some(trials_run) = outcome.trials_run {
        println!("# seed {seed}");
        println!("# trials {trials_run}");
    }
    print!("{}", format_solution(outcome.solution.as_ref()));
    match (outcome.solution.is_some(), outcome.exact) {
        (false, false) => Ok(2),
        _ => Ok(0),
    }
}

fn cmd_verify(instance: &Path, solution: &Path) -> Result<u8, String> {
    let inst = parse_instance(&read(instance)?).map_err(|e| e.to_string())?;
    let parsed = degseq_cli::format::parse_solution(&read(solution)?).map_err(|e| e.to_string())?;
    let Some(edit) = parsed else {
        println!("INVALID: solution file contains NO, nothing to verify");
        return Ok(1);
    };
    let verdict = match &inst {
        ParsedInstance::Simple(i) => check_solution(i, &edit),
        ParsedInstance::Extended(i) => check_solution_extended(i, &edit),
    };
    match verdict {
        Ok(()) => {
            println!("VALID");
            Ok(0)
        }
        Err(reason) => {
            println!("INVALID: {reason}");
            Ok(1)
        }
    }
}

fn cmd_kernelize(file: &Path, output: Option<&Path>, map: Option<&Path>) -> Result<u8, String> {
    let parsed = parse_instance(&read(file)?).map_err(|e| e.to_string())?;
    let ParsedInstance::Simple(inst) = parsed else {
        return Err("kernelization expects the combined-budget flavor with `o ea`".into());
    };
    match kernelize_edge_addition(&inst).map_err(|e| e.to_string())? {
        KernelOutcome::No => {
            println!("NO");
            Ok(0)
        }
        KernelOutcome::Unchanged => {
            let mut text = String::from("# unchanged\n");
            text.push_str(&format_instance(&ParsedInstance::Simple(inst)));
            write_or_print(output, &text)?;
            Ok(0)
        }
        KernelOutcome::Reduced(res) => {
            let (graph, id_map) = renumber(&res.kernel.graph);
            let renumbered = Instance::new(
                graph,
                res.kernel.sigma.clone(),
                res.kernel.ops,
                res.kernel.budget,
            );
            let text = format_instance(&ParsedInstance::Simple(renumbered));
            write_or_print(output, &text)?;
            let mut map_text = String::new();
            for (new_id, old_id) in &id_map {
                if res.gadget_vertices.contains(old_id) {
                    map_text.push_str(&format!("{new_id} gadget\n"));
                } else {
                    map_text.push_str(&format!("{new_id} {old_id}\n"));
                }
            }
            match map {
                Some(p) => fs::write(p, map_text).map_err(|e| format!("{}: {e}", p.display()))?,
                None => print!("{}", map_text.lines().map(|l| format!("# map {l}\n")).collect::<String>()),
            }
            Ok(0)
        }
    }
}

fn cmd_generate(
    family: &str,
    graphs: &[String],
    k: usize,
    output: Option<&Path>,
    provenance_path: Option<&Path>,
) -> Result<u8, String> {
    let sources: Vec<Graph> = graphs.iter().map(|s| load_graph(s)).collect::<Result<_, _>>()?;
    let (instance, provenance): (Instance, Provenance) = match family {
        "clique-ed" => {
            if sources.len() != 1 {
                return Err("clique-ed takes exactly one --graph".into());
            }
            (reduce_clique_edge_deletion(&sources[0], k).map_err(|e| e.to_string())?, Provenance::default())
        }
        "is-ea" => {
            if sources.len() != 1 {
                return Err("is-ea takes exactly one --graph".into());
            }
            (
                reduce_independent_set_edge_addition(&sources[0], k).map_err(|e| e.to_string())?,
                Provenance::default(),
            )
        }
        "clique-vd" => {
            if sources.len() != 1 {
                return Err("clique-vd takes exactly one --graph".into());
            }
            let (inst, prov) =
                reduce_clique_vertex_deletion(&sources[0], k).map_err(|e| e.to_string())?;
            (inst, prov)
        }
        "cross-ed" => {
            let (inst, prov) =
                cross_compose_edge_deletion(&sources, k).map_err(|e| e.to_string())?;
            (inst, prov)
        }
        "cross-vd" => {
            let (inst, prov) =
                cross_compose_vertex_deletion(&sources, k).map_err(|e| e.to_string())?;
            (inst, prov)
        }
        other => return Err(format!("unknown family `{other}`")),
    };
    write_or_print(output, &format_instance(&ParsedInstance::Simple(instance)))?;
    if let Some(p) = provenance_path {
        fs::write(p, provenance.to_string()).map_err(|e| format!("{}: {e}", p.display()))?;
    }
    Ok(0)
}

fn dispatch(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Solve { file, mode, trials } => cmd_solve(&file, mode, trials, cli.seed),
        Command::Verify { instance, solution } => cmd_verify(&instance, &solution),
        Command::Kernelize { file, output, map } => {
            cmd_kernelize(&file, output.as_deref(), map.as_deref())
        }
        Command::Generate { family, graphs, k, output, provenance } => {
            cmd_generate(&family, &graphs, k, output.as_deref(), provenance.as_deref())
        }
        Command::Bench { family, t, k, base_n, base_d, reps, mode } => {
            let cfg = BenchConfig {
                family,
                t_values: t,
                k,
                base_n,
                base_d,
                seed: cli.seed,
                reps,
                mode,
            };
            print!("{}", run_bench(&cfg)?);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
