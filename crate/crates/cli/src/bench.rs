//! Benchmark harness over generated instance families.
//!
//! Emits one tab-separated row per family member; lines starting with `#` are
//! headers. Instances are generated from the seed alone, so reruns with the
//! same parameters hash identically.

use crate::format::{format_instance, ParsedInstance};
use crate::run::{solve, SolveMode};
use degseq::corpus::random_regular_graph;
use degseq::fnv1a64;
use degseq::reductions::{cross_compose_edge_deletion, cross_compose_vertex_deletion};
use degseq::{mix_seed, Graph};
use std::fmt::Write;
use std::str::FromStr;
use std::time::Instant;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BenchFamily {
    CrossEd,
    CrossVd,
}

impl std::fmt::Display for BenchFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            BenchFamily::CrossEd => "cross-ed",
            BenchFamily::CrossVd => "cross-vd",
        })
    }
}

impl FromStr for BenchFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cross-ed" => Ok(BenchFamily::CrossEd),
            "cross-vd" => Ok(BenchFamily::CrossVd),
            other => Err(format!("unknown family `{other}` (use cross-ed, cross-vd)")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub family: BenchFamily,
    pub t_values: Vec<usize>,
    pub k: usize,
    pub base_n: usize,
    pub base_d: usize,
    pub seed: u64,
    pub reps: u32,
    pub mode: SolveMode,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            family: BenchFamily::CrossEd,
            t_values: vec![1, 2, 4],
            k: 2,
            base_n: 4,
            base_d: 3,
            seed: 1,
            reps: 11,
            mode: SolveMode::Auto,
        }
    }
}

/// Runs the benchmark and returns the report text.
pub fn run_bench(cfg: &BenchConfig) -> Result<String, String> {
    let mut out = String::new();
    writeln!(out, "# seed {}", cfg.seed).unwrap();
    writeln!(out, "# family\tk\tt\tn\tm\tmode\thash\tdecision\tmedian_ms\tratio").unwrap();
    let mut previous_ms: Option<f64> = None;

    for (ti, &t) in cfg.t_values.iter().enumerate() {
        let bases: Vec<Graph> = (0..t)
            .map(|copy| {
                random_regular_graph(
                    cfg.base_n,
                    cfg.base_d,
                    mix_seed(cfg.seed, (ti * 97 + copy) as u64),
                )
                .ok_or_else(|| {
                    format!("no {}-regular graph on {} vertices", cfg.base_d, cfg.base_n)
                })
            })
            .collect::<Result<_, _>>()?;
        let (instance, _) = match cfg.family {
            BenchFamily::CrossEd => cross_compose_edge_deletion(&bases, cfg.k),
            BenchFamily::CrossVd => cross_compose_vertex_deletion(&bases, cfg.k),
        }
        .map_err(|e| e.to_string())?;
        let parsed = ParsedInstance::Simple(instance);
        let hash = fnv1a64(format_instance(&parsed).as_bytes());

        let mut samples: Vec<u128> = Vec::with_capacity(cfg.reps as usize);
        let mut decision = String::new();
        for _ in 0..cfg.reps {
            let start = Instant::now();
            let outcome = solve(&parsed, cfg.mode, None, cfg.seed)?;
            samples.push(start.elapsed().as_nanos());
            decision = match (outcome.solution.is_some(), outcome.exact) {
                (true, _) => "yes".to_string(),
                (false, true) => "no".to_string(),
                (false, false) => "no?".to_string(),
            };
        }
        samples.sort_unstable();
        let median_ms = samples[samples.len() / 2] as f64 / 1e6;
        let ratio = previous_ms
            .map(|prev| format!("{:.2}", median_ms / prev))
            .unwrap_or_else(|| "-".to_string());
        previous_ms = Some(median_ms);

        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{:016x}\t{}\t{:.3}\t{}",
            cfg.family,
            cfg.k,
            t,
            parsed.graph().vertex_count(),
            parsed.graph().edge_count(),
            cfg.mode,
            hash,
            decision,
            median_ms,
            ratio
        )
        .unwrap();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bench_rows_are_deterministic() {
        let cfg = BenchConfig { t_values: vec![1, 2], reps: 3, ..BenchConfig::default() };
        let a = run_bench(&cfg).unwrap();
        let b = run_bench(&cfg).unwrap();
        let hashes = |text: &str| -> Vec<String> {
            text.lines()
                .filter(|l| !l.starts_with('#'))
                .map(|l| l.split('\t').nth(6).unwrap().to_string())
                .collect()
        };
        assert_eq!(hashes(&a), hashes(&b));
        assert_eq!(a.lines().filter(|l| !l.starts_with('#')).count(), 2);
    }

    #[test]
    fn bench_reports_ratio_column() {
        let cfg = BenchConfig { t_values: vec![1, 2, 4], reps: 3, ..BenchConfig::default() };
        let text = run_bench(&cfg).unwrap();
        let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(rows.len(), 3);
        assert!(rows[0].ends_with("\t-"));
        for row in &rows[1..] {
            let ratio = row.rsplit('\t').next().unwrap();
            assert!(ratio.parse::<f64>().is_ok(), "bad ratio column: {row}");
        }
        // Every family member is a yes-instance (any edge is a 2-clique).
        for row in &rows {
            assert!(row.split('\t').any(|c| c == "yes"), "row: {row}");
        }
    }
}
