//! End-to-end tests against the built binary.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_degseq"))
}

fn write_temp(name: &str, content: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("degseq-cli-test-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, content).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

const TRIANGLE: &str = "p 3 3\ne 1 2\ne 2 3\ne 1 3\ns 1 1 0\no ed\nk 2\n";

#[test]
fn solve_brute_prints_deterministic_solution() {
    let path = write_temp("triangle.txt", TRIANGLE);
    let out = run(&["solve", "--mode", "brute", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("YES"));
    // Smallest canonical witness: both deletions at vertex 1.
    assert!(text.contains("ed 1 2\ned 1 3"), "unexpected block:\n{text}");
}

#[test]
fn solve_modes_agree_on_triangle() {
    let path = write_temp("triangle2.txt", TRIANGLE);
    for mode in ["brute", "derand", "random", "auto"] {
        let out = run(&["solve", "--mode", mode, path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "mode {mode}");
        assert!(stdout(&out).contains("YES"), "mode {mode}");
    }
}

#[test]
fn solve_no_instance_exits_zero() {
    let no = TRIANGLE.replace("s 1 1 0", "s 3 3 3").replace("k 2", "k 1");
    let path = write_temp("no.txt", &no);
    let out = run(&["solve", "--mode", "brute", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("NO"));
}

#[test]
fn random_mode_zero_trials_is_probabilistic() {
    let path = write_temp("triangle3.txt", TRIANGLE);
    let out = run(&["solve", "--mode", "random", "--trials", "0", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let text = stdout(&out);
    assert!(text.contains("NO"));
    assert!(text.contains("# seed"));
}

#[test]
fn extended_instances_are_accepted() {
    let ext = TRIANGLE.replace("o ed\nk 2\n", "b 0 2 0\n");
    let path = write_temp("ext.txt", &ext);
    let out = run(&["solve", "--mode", "derand", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("YES"));
}

#[test]
fn parse_errors_carry_line_numbers_and_exit_one() {
    let path = write_temp("loop.txt", "p 2 1\ne 1 1\ns 0 0\no ed\nk 0\n");
    let out = run(&["solve", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr).to_string();
    assert!(err.contains("line 2"), "stderr: {err}");
}

#[test]
fn verify_accepts_solver_output_and_rejects_mismatch() {
    let inst = write_temp("verify-inst.txt", TRIANGLE);
    let out = run(&["solve", "--mode", "brute", inst.to_str().unwrap()]);
    let sol = write_temp("verify-sol.txt", &stdout(&out));
    let ok = run(&["verify", inst.to_str().unwrap(), sol.to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("VALID"));

    let bad = write_temp("verify-bad.txt", "YES\ned 1 2\n");
    let rejected = run(&["verify", inst.to_str().unwrap(), bad.to_str().unwrap()]);
    assert_eq!(rejected.status.code(), Some(1));
    assert!(stdout(&rejected).contains("INVALID: degree sequence mismatch"));
}

#[test]
fn kernelize_shrinks_and_solution_remains_liftable() {
    // Six isolated vertices; one addition reaches the target.
    let inst = "p 6 0\ns 1 1 0 0 0 0\no ea\nk 1\n";
    let path = write_temp("kernel-in.txt", inst);
    let kernel_out = write_temp("kernel-out.txt", "");
    let out = run(&[
        "kernelize",
        path.to_str().unwrap(),
        "--output",
        kernel_out.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let kernel_text = fs::read_to_string(&kernel_out).unwrap();
    assert!(kernel_text.starts_with("p 7 3\n"), "kernel:\n{kernel_text}");

    // The kernel is solvable too.
    let ksol = run(&["solve", "--mode", "brute", kernel_out.to_str().unwrap()]);
    assert!(stdout(&ksol).contains("YES"));
}

#[test]
fn kernelize_reports_infeasible_targets() {
    let inst = "p 3 2\ne 1 2\ne 2 3\ns 1 1 1\no ea\nk 2\n";
    let path = write_temp("kernel-no.txt", inst);
    let out = run(&["kernelize", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("NO"));
}

#[test]
fn generate_emits_solvable_instances_with_provenance() {
    let out_path = write_temp("gen-out.txt", "");
    let prov_path = write_temp("gen-prov.txt", "");
    let out = run(&[
        "generate",
        "clique-vd",
        "--graph",
        "k5",
        "--k",
        "2",
        "--output",
        out_path.to_str().unwrap(),
        "--provenance",
        prov_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(&out_path).unwrap();
    assert!(text.starts_with("p 15 20\n"));
    let prov = fs::read_to_string(&prov_path).unwrap();
    assert_eq!(prov.lines().count(), 10);
    assert!(prov.lines().all(|l| l.starts_with("subdivision ")));

    let solved = run(&["solve", "--mode", "brute", out_path.to_str().unwrap()]);
    assert!(stdout(&solved).contains("YES"));
}

#[test]
fn generate_round_trips_through_parser() {
    let out_path = write_temp("gen-rt.txt", "");
    let out = run(&[
        "generate",
        "cross-ed",
        "--graph",
        "k4",
        "--graph",
        "k4",
        "--k",
        "3",
        "--output",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&out_path).unwrap();
    let parsed = degseq_cli::format::parse_instance(&text).unwrap();
    assert_eq!(degseq_cli::format::format_instance(&parsed), text);
}

#[test]
fn bench_rows_hash_identically_across_reruns() {
    let args = ["bench", "--t", "1,2", "--reps", "3", "--seed", "9"];
    let a = stdout(&run(&args));
    let b = stdout(&run(&args));
    let pick = |text: &str| -> Vec<String> {
        text.lines()
            .filter(|l| !l.starts_with('#'))
            .map(|l| l.split('\t').nth(6).unwrap().to_string())
            .collect()
    };
    assert_eq!(pick(&a), pick(&b));
    assert_eq!(pick(&a).len(), 2);
}
