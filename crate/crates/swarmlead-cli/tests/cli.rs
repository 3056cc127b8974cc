//! End-to-end tests of the `swarmlead` binary: subcommand plumbing,
//! determinism of written artifacts, exit codes, and the manifest.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_swarmlead"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn assert_success(out: &Output) {
    assert!(
        out.status.success(),
        "stdout: {}\nstderr: {}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
}

fn write_tiny_config(dir: &Path) -> std::path::PathBuf {
    let path = dir.join("tiny.cfg");
    fs::write(
        &path,
        "\
[simulation]
model = wolfsheep
steps = 120
n_sheep = 12
n_pack = 3
n_independent = 3

[benchmark]
seeds = 1,2
methods = netinfer,tlmi

[evaluation]
roles = alpha,pack,independent
topk = 1,3

[netinfer]
window = 20

[tlmi]
window = 20
",
    )
    .unwrap();
    path
}

#[test]
fn simulate_is_deterministic_and_reports_rows() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for out in [&a, &b] {
        let res = run(&[
            "simulate",
            "wolfsheep",
            "--seed",
            "7",
            "--steps",
            "40",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_success(&res);
    }
    let ta = fs::read(&a).unwrap();
    let tb = fs::read(&b).unwrap();
    assert_eq!(ta, tb, "same invocation must write identical bytes");
    let text = String::from_utf8(ta).unwrap();
    assert!(text.starts_with("tick,agent_id,role,x,y\n"));
    // 30 wolves every tick plus living sheep.
    assert!(text.lines().count() > 40 * 30);
}

#[test]
fn simulate_zero_steps_writes_header_only() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("empty.csv");
    let res = run(&[
        "simulate",
        "vicsek",
        "--steps",
        "0",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_success(&res);
    assert_eq!(fs::read_to_string(&out_path).unwrap(), "tick,agent_id,role,x,y\n");
}

#[test]
fn unknown_model_is_a_usage_error() {
    let res = run(&["simulate", "gravity", "--steps", "1"]);
    assert_eq!(res.status.code(), Some(1));
}

#[test]
fn analyze_writes_ranking_and_histogram() {
    let dir = tempfile::tempdir().unwrap();
    let traj = dir.path().join("wolves.csv");
    assert_success(&run(&[
        "simulate",
        "wolfsheep",
        "--seed",
        "3",
        "--steps",
        "200",
        "--out",
        traj.to_str().unwrap(),
    ]));
    let res = run(&[
        "analyze",
        "netinfer",
        "--trajectory",
        traj.to_str().unwrap(),
        "--window",
        "30",
        "--roles",
        "alpha,pack,independent",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_success(&res);
    let ranking = fs::read_to_string(dir.path().join("wolves_netinfer_ranking.csv")).unwrap();
    assert!(ranking.starts_with("rank,agent_id,out_score,true_leader\n"));
    assert_eq!(ranking.lines().count(), 31, "30 wolves ranked");
    // The alpha leads this fixture.
    assert!(ranking.lines().nth(1).unwrap().starts_with("1,100,"));
    assert!(dir.path().join("wolves_netinfer_matrix.csv").exists());
    assert!(dir.path().join("wolves_netinfer_edges.json").exists());
    assert!(dir.path().join("wolves_netinfer_histogram.csv").exists());
}

#[test]
fn analyze_short_trajectory_is_a_data_error() {
    let dir = tempfile::tempdir().unwrap();
    let traj = dir.path().join("short.csv");
    assert_success(&run(&[
        "simulate",
        "wolfsheep",
        "--seed",
        "1",
        "--steps",
        "20",
        "--out",
        traj.to_str().unwrap(),
    ]));
    let res = run(&[
        "analyze",
        "te",
        "--trajectory",
        traj.to_str().unwrap(),
        "--roles",
        "alpha,pack,independent",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(res.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&res.stderr);
    assert!(stderr.contains("at least"), "stderr: {stderr}");
}

#[test]
fn tlmi_profiles_flag_emits_profiles() {
    let dir = tempfile::tempdir().unwrap();
    let traj = dir.path().join("w.csv");
    assert_success(&run(&[
        "simulate",
        "wolfsheep",
        "--seed",
        "2",
        "--steps",
        "150",
        "--out",
        traj.to_str().unwrap(),
    ]));
    let res = run(&[
        "analyze",
        "tlmi",
        "--trajectory",
        traj.to_str().unwrap(),
        "--window",
        "40",
        "--roles",
        "alpha,pack",
        "--out",
        dir.path().to_str().unwrap(),
        "--profiles",
    ]);
    assert_success(&res);
    let profiles = fs::read_to_string(dir.path().join("w_tlmi_profiles.csv")).unwrap();
    assert!(profiles.starts_with("src,dst,variable,lag,mi\n"));
    // 15*14 ordered pairs x 3 variables x 11 lags.
    assert_eq!(profiles.lines().count(), 1 + 15 * 14 * 3 * 11);
}

#[test]
fn benchmark_writes_summary_and_complete_manifest_deterministically() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_tiny_config(dir.path());
    let out_a = dir.path().join("run_a");
    let out_b = dir.path().join("run_b");
    for out in [&out_a, &out_b] {
        let res = run(&[
            "benchmark",
            "--config",
            cfg.to_str().unwrap(),
            "--out",
            out.to_str().unwrap(),
            "--jobs",
            "2",
        ]);
        assert_success(&res);
    }
    let manifest_a = fs::read_to_string(out_a.join("MANIFEST")).unwrap();
    let manifest_b = fs::read_to_string(out_b.join("MANIFEST")).unwrap();
    assert_eq!(manifest_a, manifest_b, "byte-identical artifacts expected");
    assert!(manifest_a.starts_with("status=complete\n"));
    // One line per artifact: 2 seeds x 2 methods x 4 files + summaries.
    assert_eq!(manifest_a.lines().count(), 1 + 2 * 2 * 4 + 2);
    let summary = fs::read_to_string(out_a.join("summary.json")).unwrap();
    assert!(summary.contains("\"simulation\": \"wolfsheep\""));
    assert!(out_a.join("wolfsheep_netinfer_seed1_matrix.csv").exists());
    assert!(out_a.join("wolfsheep_tlmi_seed2_ranking.csv").exists());
    let table = fs::read_to_string(out_a.join("summary.txt")).unwrap();
    assert!(table.contains("top 1"));
}

#[test]
fn benchmark_seed_override_and_env_outdir() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_tiny_config(dir.path());
    let out = dir.path().join("env_out");
    let res = bin()
        .args(["benchmark", "--config", cfg.to_str().unwrap(), "--seeds", "5"])
        .env("SWARMLEAD_OUT", &out)
        .output()
        .unwrap();
    assert_success(&res);
    assert!(out.join("wolfsheep_netinfer_seed5_matrix.csv").exists());
    assert!(!out.join("wolfsheep_netinfer_seed1_matrix.csv").exists());
}

#[test]
fn shipped_paper_configs_parse() {
    // Single-seed smoke run of the shipped wolf-sheep replication config.
    let dir = tempfile::tempdir().unwrap();
    let cfg = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs/wolfsheep_paper.cfg");
    let res = run(&[
        "benchmark",
        "--config",
        cfg.to_str().unwrap(),
        "--seeds",
        "1",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_success(&res);
    let summary = fs::read_to_string(dir.path().join("summary.json")).unwrap();
    assert!(summary.contains("\"analyzed_agent_count\": 30"));
}
