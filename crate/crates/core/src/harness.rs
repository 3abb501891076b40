//! Experiment driver: runs solvers on nested scenario families and emits
//! plot-ready rows.
//!
//! For every seed one family is generated at the largest sweep size; each
//! sweep point solves a prefix of it, so a smaller deployment is always a
//! subset of the next larger one. All solvers at a point share the same
//! coverage matrix. Cells run in parallel but rows come out in a fixed order:
//! seed (as listed), sweep point, then solver (as listed).

use std::collections::BTreeMap;
use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{enumerate_exhaustive, solve_exact, SearchBudget};
use crate::geometry::{CameraModel, CoverageMatrix};
use crate::greedy::{solve_greedy, BenefitMode, GreedyStep};
use crate::metrics::{histogram_labels, Assignment, SolutionReport};
use crate::objectives::{default_rho, ObjectiveKind, ObjectiveSpec};
use crate::scenario::{Grid, ScenarioFamily};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SolverKind {
    IlpExact,
    IqpExact,
    InlpExact,
    GreedyLinear,
    GreedyQuadratic,
}

impl SolverKind {
    pub const ALL: [SolverKind; 5] = [
        Self::IlpExact,
        Self::IqpExact,
        Self::InlpExact,
        Self::GreedyLinear,
        Self::GreedyQuadratic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::IlpExact => "ilp-exact",
            Self::IqpExact => "iqp-exact",
            Self::InlpExact => "inlp-exact",
            Self::GreedyLinear => "greedy-linear",
            Self::GreedyQuadratic => "greedy-quadratic",
        }
    }

    pub fn is_exact(self) -> bool {
        self.objective().is_some()
    }

    /// Objective optimized by an exact solver.
    pub fn objective(self) -> Option<ObjectiveKind> {
        match self {
            Self::IlpExact => Some(ObjectiveKind::CoverageMax),
            Self::IqpExact => Some(ObjectiveKind::VectorDistance),
            Self::InlpExact => Some(ObjectiveKind::BalancingIndex),
            Self::GreedyLinear | Self::GreedyQuadratic => None,
        }
    }
}

impl fmt::Display for SolverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for SolverKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownSolver(s.to_string()))
    }
}

impl Serialize for SolverKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for SolverKind {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Penalty coefficient: fixed, or derived from the scenario size.
///
/// The default is `1 / (2n)`. The balancing-index objective measures coverage
/// in units of `1 / (k m)` rather than whole targets, so its default is divided
/// by `k m` as well; otherwise the penalty outweighs any coverage gain and the
/// optimum switches every sensor off.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum Rho {
    #[default]
    Default,
    Fixed(f64),
}

impl Rho {
    pub fn resolve(self, kind: ObjectiveKind, sensor_count: usize, k: u32, target_count: usize) -> Result<f64> {
        match self {
            Rho::Default => {
                let base = default_rho(sensor_count)?;
                Ok(match kind {
                    ObjectiveKind::BalancingIndex if target_count > 0 => base / (f64::from(k) * target_count as f64),
                    _ => base,
                })
            }
            Rho::Fixed(r) => Ok(r),
        }
    }
}

impl FromStr for Rho {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "default" {
            return Ok(Rho::Default);
        }
        let r: f64 = s
            .parse()
            .map_err(|_| Error::InvalidConfig(format!("rho must be a number or `default`, got `{s}`")))?;
        if !(r > 0.0 && r <= 1.0) {
            return Err(Error::InvalidRho(r));
        }
        Ok(Rho::Fixed(r))
    }
}

impl fmt::Display for Rho {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rho::Default => f.write_str("default"),
            Rho::Fixed(r) => write!(f, "{r}"),
        }
    }
}

impl Serialize for Rho {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Rho::Default => s.serialize_str("default"),
            Rho::Fixed(r) => s.serialize_f64(*r),
        }
    }
}

impl<'de> Deserialize<'de> for Rho {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(r) => r.to_string().parse(),
            Raw::Text(s) => s.parse(),
        }
        .map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SweepAxis {
    /// Fixed sensor count, growing target population.
    VaryTargets { n: usize, m_list: Vec<usize> },
    /// Fixed target count, growing sensor population.
    VarySensors { m: usize, n_list: Vec<usize> },
}

impl SweepAxis {
    /// `(n, m)` of every sweep point, in order.
    pub fn points(&self) -> Vec<(usize, usize)> {
        match self {
            SweepAxis::VaryTargets { n, m_list } => m_list.iter().map(|&m| (*n, m)).collect(),
            SweepAxis::VarySensors { m, n_list } => n_list.iter().map(|&n| (n, *m)).collect(),
        }
    }

    fn list(&self) -> &[usize] {
        match self {
            SweepAxis::VaryTargets { m_list, .. } => m_list,
            SweepAxis::VarySensors { n_list, .. } => n_list,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub axis: SweepAxis,
    pub k: u32,
    pub seeds: Vec<u64>,
    pub solvers: Vec<SolverKind>,
    #[serde(default = "default_range")]
    pub sensing_range: f64,
    #[serde(default = "default_pans")]
    pub pan_count: usize,
    #[serde(default = "default_grid")]
    pub grid: Grid,
    #[serde(default)]
    pub rho: Rho,
    /// Node limit per exact solve; `None` searches to completion.
    #[serde(default = "default_max_nodes")]
    pub max_nodes: Option<u64>,
}

fn default_range() -> f64 {
    25.0
}

fn default_pans() -> usize {
    8
}

fn default_grid() -> Grid {
    Grid {
        width: 50.0,
        height: 50.0,
    }
}

fn default_max_nodes() -> Option<u64> {
    Some(DEFAULT_MAX_NODES)
}

pub const DEFAULT_MAX_NODES: u64 = 50_000_000;

impl ExperimentConfig {
    /// Desk-scale target sweep: 8 sensors, 4..32 targets on a 50 x 50 grid.
    pub fn desk_targets(k: u32, seeds: Vec<u64>) -> Self {
        Self {
            axis: SweepAxis::VaryTargets {
                n: 8,
                m_list: vec![4, 8, 16, 24, 32],
            },
            k,
            seeds,
            solvers: SolverKind::ALL.to_vec(),
            sensing_range: default_range(),
            pan_count: default_pans(),
            grid: default_grid(),
            rho: Rho::Default,
            max_nodes: default_max_nodes(),
        }
    }

    /// Desk-scale sensor sweep: 16 targets, 4..10 sensors.
    pub fn desk_sensors(k: u32, seeds: Vec<u64>) -> Self {
        Self {
            axis: SweepAxis::VarySensors {
                m: 16,
                n_list: vec![4, 6, 8, 10],
            },
            ..Self::desk_targets(k, seeds)
        }
    }

    /// Greedy-only sweep at 50 sensors on a 125 x 125 grid, 5..125 targets.
    pub fn large_scale_targets(k: u32, seeds: Vec<u64>) -> Self {
        Self {
            axis: SweepAxis::VaryTargets {
                n: 50,
                m_list: (1..=25).map(|i| 5 * i).collect(),
            },
            solvers: vec![SolverKind::GreedyLinear, SolverKind::GreedyQuadratic],
            grid: Grid {
                width: 125.0,
                height: 125.0,
            },
            ..Self::desk_targets(k, seeds)
        }
    }

    /// Greedy-only sweep at 50 targets, 20..115 sensors.
    pub fn large_scale_sensors(k: u32, seeds: Vec<u64>) -> Self {
        Self {
            axis: SweepAxis::VarySensors {
                m: 50,
                n_list: (4..=23).map(|i| 5 * i).collect(),
            },
            ..Self::large_scale_targets(k, seeds)
        }
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let cfg: Self = toml::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn camera(&self) -> Result<CameraModel> {
        CameraModel::with_pans(self.sensing_range, self.pan_count)
    }

    pub fn budget(&self) -> SearchBudget {
        SearchBudget {
            max_nodes: self.max_nodes,
            max_time: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidConfig(m.to_string()));
        if self.seeds.is_empty() {
            return bad("no seeds");
        }
        if self.solvers.is_empty() {
            return bad("no solvers");
        }
        if self.k == 0 {
            return Err(Error::ZeroK);
        }
        let list = self.axis.list();
        if list.is_empty() {
            return bad("empty sweep list");
        }
        if list.windows(2).any(|w| w[0] >= w[1]) {
            return bad("sweep list must be strictly increasing");
        }
        if self.axis.points().iter().any(|&(n, m)| n == 0 || m == 0) {
            return bad("sweep points need at least one sensor and one target");
        }
        Grid::new(self.grid.width, self.grid.height)?;
        self.camera()?;
        if let Rho::Fixed(r) = self.rho {
            if !(r > 0.0 && r <= 1.0) {
                return Err(Error::InvalidRho(r));
            }
        }
        Ok(())
    }
}

/// Result of running one solver on one coverage matrix.
#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub solver: SolverKind,
    pub assignment: Assignment,
    pub report: SolutionReport,
    pub optimal: bool,
    pub wall_time: Duration,
    pub trace: Option<Vec<GreedyStep>>,
}

/// Runs `solver`. Exact solvers optimize their own objective; for the
/// greedy variants `spec` only decides how the objective value is scored.
pub fn solve(
    matrix: &CoverageMatrix,
    solver: SolverKind,
    spec: &ObjectiveSpec,
    budget: SearchBudget,
) -> Result<SolveOutcome> {
    let start = Instant::now();
    let out = match solver.objective() {
        Some(kind) => {
            let sol = solve_exact(matrix, &spec.with_kind(kind), budget)?;
            SolveOutcome {
                solver,
                assignment: sol.assignment,
                report: sol.report,
                optimal: sol.stats.optimal,
                wall_time: Duration::ZERO,
                trace: None,
            }
        }
        None => {
            let mode = match solver {
                SolverKind::GreedyLinear => BenefitMode::Linear,
                _ => BenefitMode::Quadratic,
            };
            let out = solve_greedy(matrix, spec, mode)?;
            SolveOutcome {
                solver,
                assignment: out.assignment,
                report: out.report,
                optimal: false,
                wall_time: Duration::ZERO,
                trace: Some(out.trace),
            }
        }
    };
    Ok(SolveOutcome {
        wall_time: start.elapsed(),
        ..out
    })
}

/// Exhaustive objective value for cross-checking an exact solve.
pub fn oracle_value(matrix: &CoverageMatrix, solver: SolverKind, spec: &ObjectiveSpec) -> Result<Option<f64>> {
    match solver.objective() {
        Some(kind) => Ok(Some(enumerate_exhaustive(matrix, &spec.with_kind(kind))?.1)),
        None => Ok(None),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRow {
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub k: u32,
    pub solver: SolverKind,
    pub balancing_index: f64,
    pub fairness_index: f64,
    pub total_coverage: u64,
    pub active_sensors: usize,
    pub sensor_usage_percent: f64,
    /// Targets covered exactly 0..k−1 times, then at least k times.
    pub histogram: Vec<usize>,
    pub wall_time: Duration,
    /// Exact solve completed within budget; always false for greedy rows.
    pub optimal: bool,
}

impl ResultRow {
    pub fn from_outcome(seed: u64, n: usize, m: usize, out: &SolveOutcome) -> Self {
        Self {
            seed,
            n,
            m,
            k: out.report.coverage.k(),
            solver: out.solver,
            balancing_index: out.report.balancing_index,
            fairness_index: out.report.fairness_index,
            total_coverage: out.report.coverage.total(),
            active_sensors: out.report.active_sensor_count,
            sensor_usage_percent: 100.0 * out.report.active_sensor_count as f64 / n as f64,
            histogram: out.report.histogram.clone(),
            wall_time: out.wall_time,
            optimal: out.optimal,
        }
    }

    pub fn uncovered_fraction(&self) -> f64 {
        self.histogram[0] as f64 / self.m as f64
    }
}

/// Runs every (seed, sweep point, solver) cell of the experiment.
pub fn run_sweep(config: &ExperimentConfig) -> Result<Vec<ResultRow>> {
    config.validate()?;
    let camera = config.camera()?;
    let points = config.axis.points();
    let n_max = points.iter().map(|p| p.0).max().unwrap_or(0);
    let m_max = points.iter().map(|p| p.1).max().unwrap_or(0);

    let families = config
        .seeds
        .iter()
        .map(|&seed| ScenarioFamily::generate(seed, n_max, m_max, camera, config.grid))
        .collect::<Result<Vec<_>>>()?;

    let cells: Vec<(usize, usize)> = (0..families.len())
        .flat_map(|f| (0..points.len()).map(move |p| (f, p)))
        .collect();

    let blocks = cells
        .par_iter()
        .map(|&(f, p)| {
            let (n, m) = points[p];
            let family = &families[f];
            let matrix = family.prefix(n, m)?.coverage_matrix();
            config
                .solvers
                .iter()
                .map(|&solver| {
                    // Greedy rows are scored under the balancing-index objective.
                    let kind = solver.objective().unwrap_or(ObjectiveKind::BalancingIndex);
                    let spec = ObjectiveSpec::new(kind, config.k, config.rho.resolve(kind, n, config.k, m)?)?;
                    let out = solve(&matrix, solver, &spec, config.budget())?;
                    Ok(ResultRow::from_outcome(family.seed(), n, m, &out))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(blocks.into_iter().flatten().collect())
}

/// Output layout of [`write_rows`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowFormat {
    Csv,
    JsonLines,
}

impl FromStr for RowFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Self::Csv),
            "jsonl" | "json-lines" => Ok(Self::JsonLines),
            other => Err(Error::InvalidConfig(format!("unknown output format `{other}`"))),
        }
    }
}

const FIXED_COLUMNS: [&str; 10] = [
    "seed",
    "n",
    "m",
    "k",
    "solver",
    "balancing_index",
    "fairness_index",
    "total_coverage",
    "active_sensors",
    "sensor_usage_percent",
];

/// Writes rows. Wall-clock times vary run to run, so they are only written
/// when `timing` is set; without them the output is byte-reproducible.
pub fn write_rows<W: Write>(rows: &[ResultRow], format: RowFormat, timing: bool, out: W) -> Result<()> {
    if rows.is_empty() {
        return Err(Error::NoRows);
    }
    match format {
        RowFormat::Csv => write_csv(rows, timing, out),
        RowFormat::JsonLines => write_jsonl(rows, timing, out),
    }
}

fn write_csv<W: Write>(rows: &[ResultRow], timing: bool, out: W) -> Result<()> {
    let k = rows[0].k;
    if let Some(r) = rows.iter().find(|r| r.k != k) {
        return Err(Error::InvalidConfig(format!("mixed k in one table ({k} and {})", r.k)));
    }
    let mut w = csv::Writer::from_writer(out);
    let mut header: Vec<String> = FIXED_COLUMNS.iter().map(|s| s.to_string()).collect();
    header.extend(histogram_labels(k));
    if timing {
        header.push("wall_time_ms".into());
    }
    header.push("optimal".into());
    w.write_record(&header)?;
    for r in rows {
        let mut rec = vec![
            r.seed.to_string(),
            r.n.to_string(),
            r.m.to_string(),
            r.k.to_string(),
            r.solver.to_string(),
            format!("{:.6}", r.balancing_index),
            format!("{:.6}", r.fairness_index),
            r.total_coverage.to_string(),
            r.active_sensors.to_string(),
            format!("{:.6}", r.sensor_usage_percent),
        ];
        rec.extend(r.histogram.iter().map(ToString::to_string));
        if timing {
            rec.push(format!("{:.6}", r.wall_time.as_secs_f64() * 1e3));
        }
        rec.push(r.optimal.to_string());
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

fn write_jsonl<W: Write>(rows: &[ResultRow], timing: bool, mut out: W) -> Result<()> {
    for r in rows {
        let mut v = serde_json::json!({
            "seed": r.seed,
            "n": r.n,
            "m": r.m,
            "k": r.k,
            "solver": r.solver.name(),
            "balancing_index": round6(r.balancing_index),
            "fairness_index": round6(r.fairness_index),
            "total_coverage": r.total_coverage,
            "active_sensors": r.active_sensors,
            "sensor_usage_percent": round6(r.sensor_usage_percent),
            "histogram": r.histogram,
            "optimal": r.optimal,
        });
        if timing {
            v["wall_time_ms"] = serde_json::json!(round6(r.wall_time.as_secs_f64() * 1e3));
        }
        serde_json::to_writer(&mut out, &v)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

fn round6(x: f64) -> f64 {
    (x * 1e6).round() / 1e6
}

/// Parses a table produced by `write_rows(.., RowFormat::Csv, ..)`.
pub fn read_csv<R: Read>(input: R) -> Result<Vec<ResultRow>> {
    let mut rdr = csv::Reader::from_reader(input);
    let header = rdr.headers()?.clone();
    let col = |name: &str| {
        header
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::InvalidConfig(format!("missing column `{name}`")))
    };
    let fixed: Vec<usize> = FIXED_COLUMNS.iter().map(|c| col(c)).collect::<Result<_>>()?;
    let levels: Vec<usize> = header
        .iter()
        .enumerate()
        .filter(|(_, h)| h.starts_with("level_"))
        .map(|(i, _)| i)
        .collect();
    let wall = header.iter().position(|h| h == "wall_time_ms");
    let optimal = col("optimal")?;

    fn field<T: FromStr>(rec: &csv::StringRecord, i: usize) -> Result<T> {
        let s = rec.get(i).unwrap_or_default();
        s.parse()
            .map_err(|_| Error::InvalidConfig(format!("bad csv field `{s}` in column {i}")))
    }

    let mut rows = Vec::new();
    for rec in rdr.records() {
        let rec = rec?;
        let wall_time = match wall {
            Some(i) => Duration::from_secs_f64(field::<f64>(&rec, i)? / 1e3),
            None => Duration::ZERO,
        };
        rows.push(ResultRow {
            seed: field(&rec, fixed[0])?,
            n: field(&rec, fixed[1])?,
            m: field(&rec, fixed[2])?,
            k: field(&rec, fixed[3])?,
            solver: field(&rec, fixed[4])?,
            balancing_index: field(&rec, fixed[5])?,
            fairness_index: field(&rec, fixed[6])?,
            total_coverage: field(&rec, fixed[7])?,
            active_sensors: field(&rec, fixed[8])?,
            sensor_usage_percent: field(&rec, fixed[9])?,
            histogram: levels.iter().map(|&i| field(&rec, i)).collect::<Result<_>>()?,
            wall_time,
            optimal: field(&rec, optimal)?,
        });
    }
    Ok(rows)
}

/// Seed-averaged view of one (n, m, solver) sweep point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub n: usize,
    pub m: usize,
    pub solver: SolverKind,
    pub seeds: usize,
    pub mean_balancing_index: f64,
    pub mean_fairness_index: f64,
    pub mean_sensor_usage_percent: f64,
    pub mean_uncovered_fraction: f64,
    /// Cells whose exact solve hit the budget.
    pub non_optimal_exact: usize,
}

/// Averages rows over seeds, keeping sweep order and solver order of first
/// appearance.
pub fn summarize(rows: &[ResultRow]) -> Vec<SummaryRow> {
    let mut order: Vec<(usize, usize, SolverKind)> = Vec::new();
    let mut groups: BTreeMap<(usize, usize, SolverKind), Vec<&ResultRow>> = BTreeMap::new();
    for r in rows {
        let key = (r.n, r.m, r.solver);
        let g = groups.entry(key).or_default();
        if g.is_empty() {
            order.push(key);
        }
        g.push(r);
    }
    order
        .into_iter()
        .map(|key| {
            let g = &groups[&key];
            let mean = |f: &dyn Fn(&ResultRow) -> f64| g.iter().map(|r| f(r)).sum::<f64>() / g.len() as f64;
            SummaryRow {
                n: key.0,
                m: key.1,
                solver: key.2,
                seeds: g.len(),
                mean_balancing_index: mean(&|r| r.balancing_index),
                mean_fairness_index: mean(&|r| r.fairness_index),
                mean_sensor_usage_percent: mean(&|r| r.sensor_usage_percent),
                mean_uncovered_fraction: mean(&|r| r.uncovered_fraction()),
                non_optimal_exact: g.iter().filter(|r| r.solver.is_exact() && !r.optimal).count(),
            }
        })
        .collect()
}

pub fn write_summary<W: Write>(summary: &[SummaryRow], out: W) -> Result<()> {
    if summary.is_empty() {
        return Err(Error::NoRows);
    }
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "n",
        "m",
        "solver",
        "seeds",
        "mean_balancing_index",
        "mean_fairness_index",
        "mean_sensor_usage_percent",
        "mean_uncovered_fraction",
        "non_optimal_exact",
    ])?;
    for s in summary {
        w.write_record([
            s.n.to_string(),
            s.m.to_string(),
            s.solver.to_string(),
            s.seeds.to_string(),
            format!("{:.6}", s.mean_balancing_index),
            format!("{:.6}", s.mean_fairness_index),
            format!("{:.6}", s.mean_sensor_usage_percent),
            format!("{:.6}", s.mean_uncovered_fraction),
            s.non_optimal_exact.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Parses seed lists like `1..=30`, `1..31` or `3,5,8`.
pub fn parse_seeds(s: &str) -> Result<Vec<u64>> {
    let bad = || Error::InvalidConfig(format!("cannot parse seed list `{s}`"));
    if let Some((a, b)) = s.split_once("..=") {
        let (a, b): (u64, u64) = (
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        );
        return Ok((a..=b).collect());
    }
    if let Some((a, b)) = s.split_once("..") {
        let (a, b): (u64, u64) = (
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        );
        return Ok((a..b).collect());
    }
    s.split(',').map(|p| p.trim().parse().map_err(|_| bad())).collect()
}
