//! Command-line entry point: simulate trajectory data, analyze it with one
//! detection method, or reproduce the full multi-seed benchmark.
//!
//! Exit codes: 0 success, 1 usage/configuration error, 2 data error,
//! 3 internal error.

mod artifacts;
mod config;

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use swarmlead::error::{Error, Result};
use swarmlead::evaluation::{
    self, analysis_subset, build_ranking_report, leadership_histogram, render_summary_table,
    true_leaders_of, MethodSpec,
};
use swarmlead::methods::{tlmi, MethodKind};
use swarmlead::trajectory::{read_trajectory_csv, trajectory_to_csv_string, Role};

use artifacts::ArtifactSink;
use config::FileConfig;

#[derive(Parser)]
#[command(name = "swarmlead", version, about = "Collective-motion simulators and leader-follower detection")]
struct Cli {
    /// Bound on concurrently executing seeds/pairs.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a simulation and write the trajectory CSV.
    Simulate(SimulateArgs),
    /// Run one detection method over a trajectory CSV.
    Analyze(AnalyzeArgs),
    /// Reproduce the full multi-seed benchmark from a config file.
    Benchmark(BenchmarkArgs),
}

#[derive(Args)]
struct SimulateArgs {
    /// Simulation model: vicsek or wolfsheep.
    model: String,
    /// Config file with a [simulation] section.
    #[arg(long)]
    config: Option<PathBuf>,
    /// RNG seed (overrides the config).
    #[arg(long)]
    seed: Option<u64>,
    /// Ticks to record (overrides the config).
    #[arg(long)]
    steps: Option<usize>,
    /// Output CSV path; defaults to <model>_seed<seed>.csv under
    /// $SWARMLEAD_OUT or the working directory.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Detection method: netinfer, te, or tlmi.
    method: String,
    /// Trajectory CSV to analyze.
    #[arg(long)]
    trajectory: PathBuf,
    /// Config file with a method section.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Window length override.
    #[arg(long)]
    window: Option<usize>,
    /// Roles to analyze and rank (comma separated); defaults to the
    /// [evaluation] section, else every complete track.
    #[arg(long, value_delimiter = ',')]
    roles: Option<Vec<Role>>,
    /// Output directory; defaults to $SWARMLEAD_OUT or the working directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also emit per-pair lag-MI profiles (tlmi only).
    #[arg(long)]
    profiles: bool,
}

#[derive(Args)]
struct BenchmarkArgs {
    /// Benchmark config file.
    #[arg(long)]
    config: PathBuf,
    /// Seed list override (comma separated).
    #[arg(long, value_delimiter = ',')]
    seeds: Option<Vec<u64>>,
    /// Output directory; defaults to $SWARMLEAD_OUT or the working directory.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
        {
            eprintln!("error: could not configure --jobs: {e}");
            std::process::exit(3);
        }
    }
    let outcome = match cli.command {
        Command::Simulate(args) => cmd_simulate(args),
        Command::Analyze(args) => cmd_analyze(args),
        Command::Benchmark(args) => cmd_benchmark(args),
    };
    if let Err(e) = outcome {
        eprintln!("error: {e}");
        std::process::exit(exit_code(&e));
    }
}

fn exit_code(e: &Error) -> i32 {
    match e.root() {
        Error::InvalidConfig(_) => 1,
        Error::Alignment(_)
        | Error::InsufficientData { .. }
        | Error::WindowRange { .. }
        | Error::CsvParse { .. }
        | Error::CsvSchema { .. }
        | Error::InvalidInput(_) => 2,
        Error::Io(_) | Error::Context { .. } => 3,
    }
}

fn out_dir(flag: Option<PathBuf>) -> PathBuf {
    flag.or_else(|| std::env::var_os("SWARMLEAD_OUT").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."))
}

fn load_config(path: Option<&Path>) -> Result<FileConfig> {
    match path {
        Some(path) => FileConfig::load(path),
        None => Ok(FileConfig::default()),
    }
}

fn cmd_simulate(args: SimulateArgs) -> Result<()> {
    let started = Instant::now();
    let cfg = load_config(args.config.as_deref())?;
    let mut spec = config::sim_spec(&cfg, Some(&args.model))?;
    let seed = match &mut spec {
        evaluation::SimSpec::Vicsek(c) => {
            if let Some(steps) = args.steps {
                c.steps = steps;
            }
            if let Some(seed) = args.seed {
                c.seed = seed;
            }
            c.seed
        }
        evaluation::SimSpec::WolfSheep(c) => {
            if let Some(steps) = args.steps {
                c.steps = steps;
            }
            if let Some(seed) = args.seed {
                c.seed = seed;
            }
            c.seed
        }
    };
    let ts = spec.run_with_seed(seed)?;
    let path = match args.out {
        Some(path) => path,
        None => out_dir(None).join(format!("{}_seed{}.csv", spec.name(), seed)),
    };
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        std::fs::create_dir_all(parent)?;
    }
    let text = trajectory_to_csv_string(&ts);
    std::fs::write(&path, &text)?;
    let rows = text.lines().count() - 1;
    println!(
        "wrote {} ({} data rows, {} agents, {} ticks) in {:.2?}",
        path.display(),
        rows,
        ts.agent_count(),
        ts.tick_count(),
        started.elapsed()
    );
    Ok(())
}

fn parse_method(name: &str) -> Result<MethodKind> {
    name.parse::<MethodKind>().map_err(Error::InvalidConfig)
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<()> {
    let started = Instant::now();
    let kind = parse_method(&args.method)?;
    let cfg = load_config(args.config.as_deref())?;
    let mut method = config::method_spec(&cfg, kind)?;
    if let Some(window) = args.window {
        match &mut method {
            MethodSpec::NetInfer(c) => c.window = window,
            MethodSpec::Te(c) => c.window = window,
            MethodSpec::Tlmi(c) => c.window = window,
        }
    }
    let roles = match args.roles {
        Some(roles) => Some(roles),
        None => config::evaluation_roles(&cfg)?,
    };

    let ts = read_trajectory_csv(&args.trajectory)?;
    let analyzed = analysis_subset(&ts, roles.as_deref());
    if analyzed.agent_count() == 0 {
        return Err(Error::InvalidInput(
            "no agents left to analyze after role filtering".into(),
        ));
    }
    let leaders = true_leaders_of(&ts);
    let output = method.run(&analyzed)?;
    let subset = analyzed.agent_ids();
    let report = build_ranking_report(kind, 0, &output.matrix, &subset, &leaders)?;
    let histogram = leadership_histogram(&output.events, &subset);

    let stem = args
        .trajectory
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "trajectory".into());
    let mut sink = ArtifactSink::new(&out_dir(args.out))?;
    let prefix = format!("{stem}_{kind}");
    let (matrix_csv, edges_json) = artifacts::matrix_files(&output.matrix);
    sink.write(&format!("{prefix}_matrix.csv"), &matrix_csv)?;
    sink.write(&format!("{prefix}_edges.json"), &edges_json)?;
    sink.write(&format!("{prefix}_ranking.csv"), &artifacts::ranking_csv(&report))?;
    sink.write(&format!("{prefix}_histogram.csv"), &artifacts::histogram_csv(&histogram))?;
    if args.profiles {
        if let MethodSpec::Tlmi(tlmi_cfg) = &method {
            let profiles = tlmi::lag_profiles(&analyzed, tlmi_cfg)?;
            sink.write(&format!("{prefix}_profiles.csv"), &artifacts::profiles_csv(&profiles))?;
        } else {
            return Err(Error::InvalidConfig(
                "--profiles only applies to the tlmi method".into(),
            ));
        }
    }
    sink.finish("complete", None)?;
    println!(
        "analyzed {} agents over {} windows with {kind}; artifacts under {} ({:.2?})",
        analyzed.agent_count(),
        output.window_count,
        sink.root().display(),
        started.elapsed()
    );
    for r in report.ordered.iter().take(5) {
        println!("  rank {:2}  agent {:4}  out_score {:.3}", r.rank, r.agent, r.out_score);
    }
    Ok(())
}

fn cmd_benchmark(args: BenchmarkArgs) -> Result<()> {
    let started = Instant::now();
    let cfg = FileConfig::load(&args.config)?;
    let spec = config::benchmark_spec(&cfg, args.seeds)?;
    let mut sink = ArtifactSink::new(&out_dir(args.out))?;

    match evaluation::run_benchmark(&spec) {
        Ok(run) => {
            let sim = &run.summary.simulation;
            for seed_result in &run.seeds {
                for m in &seed_result.methods {
                    let prefix = format!("{sim}_{}_seed{}", m.method, m.seed);
                    let (matrix_csv, edges_json) = artifacts::matrix_files(&m.output.matrix);
                    sink.write(&format!("{prefix}_matrix.csv"), &matrix_csv)?;
                    sink.write(&format!("{prefix}_edges.json"), &edges_json)?;
                    sink.write(&format!("{prefix}_ranking.csv"), &artifacts::ranking_csv(&m.report))?;
                    sink.write(
                        &format!("{prefix}_histogram.csv"),
                        &artifacts::histogram_csv(&m.histogram),
                    )?;
                }
            }
            let summary_json = serde_json::to_string_pretty(&run.summary)
                .map_err(|e| Error::InvalidInput(format!("summary serialization: {e}")))?;
            sink.write("summary.json", &summary_json)?;
            let table = render_summary_table(&run.summary);
            sink.write("summary.txt", &table)?;
            sink.finish("complete", None)?;
            println!("{table}");
            println!(
                "benchmark complete in {:.2?}; artifacts under {}",
                started.elapsed(),
                sink.root().display()
            );
            Ok(())
        }
        Err(e) => {
            // Keep whatever was produced and record the failure.
            sink.finish("partial", Some(&e.to_string()))?;
            Err(e)
        }
    }
}
