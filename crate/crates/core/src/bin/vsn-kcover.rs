use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use vsn_kcover::exact::SearchBudget;
use vsn_kcover::harness::{
    oracle_value, parse_seeds, run_sweep, solve, summarize, write_rows, write_summary, ExperimentConfig, Rho,
    RowFormat, SolverKind, SweepAxis, DEFAULT_MAX_NODES,
};
use vsn_kcover::metrics::{report, Assignment};
use vsn_kcover::objectives::{ObjectiveKind, ObjectiveSpec};
use vsn_kcover::prelude::{CameraModel, Grid, Scenario, ScenarioFamily};
use vsn_kcover::Result;

#[derive(Parser)]
#[command(
    name = "vsn-kcover",
    version,
    about = "Balanced k-coverage for pan-only camera networks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random scenario and write it to a file.
    Generate(GenerateArgs),
    /// Solve one scenario with one solver and print the report.
    Solve(SolveArgs),
    /// Run a seeded sweep over scenario sizes.
    Sweep(SweepArgs),
    /// Recompute metrics for a scenario and an assignment file.
    Metrics(MetricsArgs),
}

#[derive(Args)]
struct CameraArgs {
    /// Sensing range.
    #[arg(long, default_value_t = 25.0)]
    range: f64,
    /// Number of pans (angle of view is 2π / pans).
    #[arg(long, default_value_t = 8)]
    pans: usize,
    #[arg(long, default_value_t = 50.0)]
    grid_width: f64,
    #[arg(long, default_value_t = 50.0)]
    grid_height: f64,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[command(flatten)]
    camera: CameraArgs,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ObjectiveArgs {
    #[arg(long, default_value_t = 2)]
    k: u32,
    /// Penalty coefficient, or `default` for 1/(2n) (divided by k·m for inlp).
    #[arg(long, default_value = "default")]
    rho: Rho,
    /// Objective used to score greedy results and metrics (ilp, iqp, inlp).
    #[arg(long, default_value = "inlp")]
    objective: ObjectiveKind,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    scenario: PathBuf,
    /// ilp-exact, iqp-exact, inlp-exact, greedy-linear or greedy-quadratic.
    #[arg(long)]
    solver: SolverKind,
    #[command(flatten)]
    objective: ObjectiveArgs,
    /// Cross-check an exact solve against full enumeration.
    #[arg(long)]
    oracle: bool,
    /// Print the greedy step trace.
    #[arg(long)]
    trace: bool,
    /// Node limit for exact solvers.
    #[arg(long, default_value_t = DEFAULT_MAX_NODES)]
    max_nodes: u64,
    /// Also write the assignment to this file.
    #[arg(long)]
    assignment_out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// TOML experiment config; replaces all sweep flags below.
    #[arg(long)]
    config: Option<PathBuf>,
    /// `targets` (fixed n) or `sensors` (fixed m).
    #[arg(long, default_value = "targets")]
    axis: String,
    #[arg(long, default_value_t = 8)]
    n: usize,
    #[arg(long, default_value_t = 16)]
    m: usize,
    #[arg(long, value_delimiter = ',', default_value = "4,8,16,24,32")]
    m_list: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "4,6,8,10")]
    n_list: Vec<usize>,
    #[arg(long, default_value_t = 2)]
    k: u32,
    /// Seed list: `1..=30`, `1..31` or `3,5,8`.
    #[arg(long, default_value = "1..=30")]
    seeds: String,
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "ilp-exact,iqp-exact,inlp-exact,greedy-linear,greedy-quadratic"
    )]
    solvers: Vec<SolverKind>,
    #[arg(long, default_value = "default")]
    rho: Rho,
    #[arg(long, default_value_t = DEFAULT_MAX_NODES)]
    max_nodes: u64,
    #[command(flatten)]
    camera: CameraArgs,
    /// Row output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Seed-averaged summary CSV.
    #[arg(long)]
    summary: Option<PathBuf>,
    /// csv or jsonl.
    #[arg(long, default_value = "csv")]
    format: RowFormat,
    /// Include wall-clock times (makes output non-reproducible).
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct MetricsArgs {
    #[arg(long)]
    scenario: PathBuf,
    /// One `sensor pan` or `sensor off` line per sensor.
    #[arg(long)]
    assignment: PathBuf,
    #[command(flatten)]
    objective: ObjectiveArgs,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Generate(a) => generate(a),
        Command::Solve(a) => solve_once(a),
        Command::Sweep(a) => sweep(a),
        Command::Metrics(a) => metrics(a),
    }
}

fn camera(a: &CameraArgs) -> Result<(CameraModel, Grid)> {
    Ok((
        CameraModel::with_pans(a.range, a.pans)?,
        Grid::new(a.grid_width, a.grid_height)?,
    ))
}

fn spec_for(a: &ObjectiveArgs, kind: ObjectiveKind, scenario: &Scenario) -> Result<ObjectiveSpec> {
    let rho = a
        .rho
        .resolve(kind, scenario.sensor_count(), a.k, scenario.target_count())?;
    ObjectiveSpec::new(kind, a.k, rho)
}

fn generate(a: GenerateArgs) -> Result<()> {
    let (cam, grid) = camera(&a.camera)?;
    let family = ScenarioFamily::generate(a.seed, a.n, a.m, cam, grid)?;
    family.master().save(&a.out)?;
    eprintln!("wrote {} sensors, {} targets to {}", a.n, a.m, a.out.display());
    Ok(())
}

fn print_report(out: &mut impl Write, rec: &[(String, String)]) -> io::Result<()> {
    for (k, v) in rec {
        writeln!(out, "{k}={v}")?;
    }
    Ok(())
}

fn solve_once(a: SolveArgs) -> Result<()> {
    let scenario = Scenario::load(&a.scenario)?;
    scenario.ensure_solvable()?;
    let kind = a.solver.objective().unwrap_or(a.objective.objective);
    let spec = spec_for(&a.objective, kind, &scenario)?;
    let matrix = scenario.coverage_matrix();
    let out = solve(&matrix, a.solver, &spec, SearchBudget::nodes(a.max_nodes))?;

    let stdout = io::stdout();
    let mut w = stdout.lock();
    writeln!(w, "solver={}", a.solver)?;
    writeln!(w, "rho={}", spec.rho())?;
    print_report(&mut w, &out.report.to_record())?;
    if a.solver.is_exact() {
        writeln!(w, "optimal={}", out.optimal)?;
    }
    writeln!(w, "assignment={}", out.assignment)?;

    if a.trace {
        for (i, step) in out.trace.iter().flatten().enumerate() {
            let hist: Vec<String> = step.histogram.iter().map(ToString::to_string).collect();
            writeln!(
                w,
                "step {i}: sensor {} pan {} incentive {} histogram {}",
                step.sensor,
                step.pan.index(),
                step.incentive,
                hist.join(",")
            )?;
        }
    }

    if a.oracle {
        match oracle_value(&matrix, a.solver, &spec)? {
            Some(v) => {
                let agree = v == out.report.objective_value;
                writeln!(w, "oracle_objective_value={v:.6}")?;
                writeln!(w, "oracle_agrees={agree}")?;
                if !agree {
                    return Err(vsn_kcover::Error::InvalidConfig(format!(
                        "exact solver value {} differs from enumeration {v}",
                        out.report.objective_value
                    )));
                }
            }
            None => writeln!(w, "oracle=skipped (greedy solver)")?,
        }
    }

    if let Some(path) = a.assignment_out {
        fs::write(path, out.assignment.to_text())?;
    }
    Ok(())
}

fn sweep(a: SweepArgs) -> Result<()> {
    let config = match &a.config {
        Some(path) => ExperimentConfig::from_toml(&fs::read_to_string(path)?)?,
        None => {
            let (cam, grid) = camera(&a.camera)?;
            let axis = match a.axis.as_str() {
                "targets" | "vary-targets" => SweepAxis::VaryTargets {
                    n: a.n,
                    m_list: a.m_list.clone(),
                },
                "sensors" | "vary-sensors" => SweepAxis::VarySensors {
                    m: a.m,
                    n_list: a.n_list.clone(),
                },
                other => {
                    return Err(vsn_kcover::Error::InvalidConfig(format!("unknown axis `{other}`")));
                }
            };
            ExperimentConfig {
                axis,
                k: a.k,
                seeds: parse_seeds(&a.seeds)?,
                solvers: a.solvers.clone(),
                sensing_range: cam.sensing_range(),
                pan_count: cam.pan_count(),
                grid,
                rho: a.rho,
                max_nodes: Some(a.max_nodes),
            }
        }
    };

    let rows = run_sweep(&config)?;
    match &a.out {
        Some(path) => write_rows(&rows, a.format, a.timing, BufWriter::new(File::create(path)?))?,
        None => write_rows(&rows, a.format, a.timing, io::stdout().lock())?,
    }
    if let Some(path) = &a.summary {
        write_summary(&summarize(&rows), BufWriter::new(File::create(path)?))?;
    }
    Ok(())
}

fn metrics(a: MetricsArgs) -> Result<()> {
    let scenario = Scenario::load(&a.scenario)?;
    let text = fs::read_to_string(&a.assignment)?;
    let assignment = Assignment::from_text(&text, &a.assignment, scenario.camera.pan_count())?;
    let spec = spec_for(&a.objective, a.objective.objective, &scenario)?;
    let rep = report(&scenario.coverage_matrix(), &assignment, &spec)?;
    print_report(&mut io::stdout().lock(), &rep.to_record())?;
    Ok(())
}
