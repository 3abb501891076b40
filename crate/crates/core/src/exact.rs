//! Exact optimization over every assignment by depth-first branch and bound.
//!
//! Sensors are decided in index order. Each sensor tries its pans in
//! ascending order and Off last; the first optimum met in that order is kept,
//! so results are deterministic. Pans that see no target are skipped: they
//! leave coverage unchanged while paying the activation penalty, so Off
//! strictly dominates them under every objective.
//!
//! Each node is pruned when an optimistic bound on its best completion cannot
//! beat the incumbent by more than the tie tolerance. The bounds use two
//! facts about the undecided sensors: a target can gain at most one count per
//! sensor that reaches it in some pan, and a sensor adds at most as many
//! under-covered targets as its best pan currently holds.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{CoverageMatrix, PanIndex};
use crate::metrics::{coverage_of, report, Assignment, SolutionReport};
use crate::objectives::{balancing_term, beats, evaluate, ObjectiveKind, ObjectiveSpec, ObjectiveValue};

/// Optional node and wall-clock limits. When one is hit the best assignment
/// found so far is returned with `optimal = false`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Self {
            max_nodes: Some(max_nodes),
            max_time: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes_explored: u64,
    pub nodes_pruned: u64,
    pub wall_time: Duration,
    pub optimal_value: ObjectiveValue,
    /// False when the budget ran out before the search space was exhausted.
    pub optimal: bool,
}

#[derive(Debug, Clone)]
pub struct ExactSolution {
    pub assignment: Assignment,
    pub report: SolutionReport,
    pub stats: SearchStats,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub budget: SearchBudget,
    /// Disable to walk the whole (dominance-reduced) tree.
    pub pruning: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            budget: SearchBudget::default(),
            pruning: true,
        }
    }
}

pub fn solve_exact(matrix: &CoverageMatrix, spec: &ObjectiveSpec, budget: SearchBudget) -> Result<ExactSolution> {
    solve_exact_with(matrix, spec, SearchOptions { budget, pruning: true })
}

pub fn solve_exact_with(
    matrix: &CoverageMatrix,
    spec: &ObjectiveSpec,
    options: SearchOptions,
) -> Result<ExactSolution> {
    if matrix.sensor_count() == 0 {
        return Err(Error::EmptyScenario("no sensors"));
    }
    if matrix.target_count() == 0 {
        return Err(Error::EmptyScenario("no targets"));
    }
    let start = Instant::now();
    let mut search = Search::new(matrix, spec, options, start);
    search.descend(0);

    let optimal = !search.exhausted;
    let assignment = match search.best.take() {
        Some((_, choices)) => Assignment::from_choices(choices),
        None => Assignment::all_off(matrix.sensor_count()),
    };
    let report = report(matrix, &assignment, spec)?;
    let optimal_value = ObjectiveValue {
        value: report.objective_value,
        sense: spec.sense(),
    };
    Ok(ExactSolution {
        assignment,
        report,
        stats: SearchStats {
            nodes_explored: search.nodes,
            nodes_pruned: search.pruned,
            wall_time: start.elapsed(),
            optimal_value,
            optimal,
        },
    })
}

/// Optimistic bound on the best objective value reachable by completing a
/// partial assignment of the first `decided.len()` sensors: an upper bound
/// for maximized objectives, a lower bound for `VectorDistance`.
pub fn optimistic_bound(decided: &[Option<PanIndex>], matrix: &CoverageMatrix, spec: &ObjectiveSpec) -> Result<f64> {
    if decided.len() > matrix.sensor_count() {
        return Err(Error::DimensionMismatch(format!(
            "{} decisions for {} sensors",
            decided.len(),
            matrix.sensor_count()
        )));
    }
    let mut full = decided.to_vec();
    full.resize(matrix.sensor_count(), None);
    let coverage = coverage_of(matrix, &Assignment::from_choices(full), spec.k())?;
    let tables = SuffixTables::new(matrix);
    let state = Tally::from_raw(coverage.raw(), spec.k());
    let active = decided.iter().filter(|c| c.is_some()).count();
    Ok(bound(matrix, spec, &tables, &state, decided.len(), active))
}

/// Best objective value by plain enumeration of all `(q + 1)^n` assignments,
/// in the same order and with the same tie rule as the branch and bound.
pub fn enumerate_exhaustive(matrix: &CoverageMatrix, spec: &ObjectiveSpec) -> Result<(Assignment, f64)> {
    let (n, q) = (matrix.sensor_count(), matrix.pan_count());
    if n == 0 || matrix.target_count() == 0 {
        return Err(Error::EmptyScenario("nothing to enumerate"));
    }
    // Digit value q stands for Off.
    let mut digits = vec![0usize; n];
    let to_assignment =
        |digits: &[usize]| Assignment::from_choices(digits.iter().map(|&d| (d < q).then_some(PanIndex(d))).collect());
    let mut best: Option<(f64, Vec<usize>)> = None;
    loop {
        let a = to_assignment(&digits);
        let cov = coverage_of(matrix, &a, spec.k())?;
        let v = evaluate(spec, &cov, a.active_count())?.value;
        if best.as_ref().is_none_or(|(b, _)| beats(spec.sense(), v, *b)) {
            best = Some((v, digits.clone()));
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                let (v, d) = best.expect("at least one assignment");
                return Ok((to_assignment(&d), v));
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] <= q {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// Per-depth reachability: `reach[s][t]` counts sensors `i >= s` that see
/// target `t` in at least one pan.
struct SuffixTables {
    reach: Vec<Vec<u32>>,
}

impl SuffixTables {
    fn new(matrix: &CoverageMatrix) -> Self {
        let (n, m) = (matrix.sensor_count(), matrix.target_count());
        let mut reach = vec![vec![0u32; m]; n + 1];
        for i in (0..n).rev() {
            let mut seen = vec![false; m];
            for pan in 0..matrix.pan_count() {
                for &t in matrix.targets_of(i, PanIndex(pan)) {
                    seen[t] = true;
                }
            }
            let next = reach[i + 1].clone();
            reach[i] = next.iter().zip(&seen).map(|(&r, &s)| r + u32::from(s)).collect();
        }
        Self { reach }
    }
}

/// Incrementally maintained coverage sums.
#[derive(Clone)]
struct Tally {
    k: u32,
    raw: Vec<u32>,
    /// Σ min(raw, k)
    total: u64,
    /// Σ min(raw, k)²
    sum_sq: u64,
    /// Σ (k − min(raw, k))²
    distance: u64,
}

impl Tally {
    fn from_raw(raw: &[u32], k: u32) -> Self {
        let mut t = Self {
            k,
            raw: vec![0; raw.len()],
            total: 0,
            sum_sq: 0,
            distance: raw.len() as u64 * u64::from(k) * u64::from(k),
        };
        for (idx, &c) in raw.iter().enumerate() {
            for _ in 0..c {
                t.bump(idx);
            }
        }
        t
    }

    #[inline]
    fn bump(&mut self, t: usize) {
        let c = self.raw[t];
        self.raw[t] = c + 1;
        if c < self.k {
            let (c, k) = (u64::from(c), u64::from(self.k));
            self.total += 1;
            self.sum_sq += 2 * c + 1;
            self.distance -= 2 * (k - c) - 1;
        }
    }

    #[inline]
    fn drop_one(&mut self, t: usize) {
        let c = self.raw[t] - 1;
        self.raw[t] = c;
        if c < self.k {
            let (c, k) = (u64::from(c), u64::from(self.k));
            self.total -= 1;
            self.sum_sq -= 2 * c + 1;
            self.distance += 2 * (k - c) - 1;
        }
    }

    fn capped(&self, t: usize) -> u32 {
        self.raw[t].min(self.k)
    }

    fn value(&self, spec: &ObjectiveSpec, active: usize) -> f64 {
        let penalty = spec.rho() * active as f64;
        match spec.kind() {
            ObjectiveKind::CoverageMax => self.total as f64 - penalty,
            ObjectiveKind::VectorDistance => self.distance as f64 + penalty,
            ObjectiveKind::BalancingIndex => {
                balancing_term(
                    self.total as f64,
                    self.sum_sq as f64,
                    f64::from(self.k),
                    self.raw.len() as f64,
                ) - penalty
            }
        }
    }
}

fn bound(
    matrix: &CoverageMatrix,
    spec: &ObjectiveSpec,
    tables: &SuffixTables,
    state: &Tally,
    depth: usize,
    active: usize,
) -> f64 {
    let k = spec.k();
    let rho = spec.rho();
    let penalty = rho * active as f64;
    let reach = &tables.reach[depth];

    // Best single-pan gain of each undecided sensor against current counts.
    // Later activations only raise counts, so these never underestimate.
    let mut units_by_sensor = 0u64;
    let mut coverage_max_gain = 0.0;
    for i in depth..matrix.sensor_count() {
        let best = (0..matrix.pan_count())
            .map(|p| {
                matrix
                    .targets_of(i, PanIndex(p))
                    .iter()
                    .filter(|&&t| state.raw[t] < k)
                    .count()
            })
            .max()
            .unwrap_or(0) as u64;
        units_by_sensor += best;
        coverage_max_gain += (best as f64 - rho).max(0.0);
    }

    // Room per target: capped count can rise by at most min(k − ψ, reach).
    let room = |t: usize| (k - state.capped(t)).min(reach[t]);
    let units_by_target: u64 = (0..state.raw.len()).map(|t| u64::from(room(t))).sum();
    let units = units_by_sensor.min(units_by_target);

    match spec.kind() {
        ObjectiveKind::CoverageMax => {
            let cap = state.total as f64 + units_by_target as f64;
            (state.total as f64 + coverage_max_gain).min(cap) - penalty
        }
        ObjectiveKind::VectorDistance => {
            // Spend `units` reductions on the largest residuals first; a unit
            // taking residual r to r − 1 saves 2r − 1.
            let mut at_residual = vec![0u64; k as usize + 1];
            for t in 0..state.raw.len() {
                let r = k - state.capped(t);
                for level in (r - room(t) + 1)..=r {
                    at_residual[level as usize] += 1;
                }
            }
            let mut left = units;
            let mut saving = 0u64;
            for r in (1..=k as usize).rev() {
                let take = left.min(at_residual[r]);
                saving += take * (2 * r as u64 - 1);
                left -= take;
            }
            (state.distance - saving) as f64 + penalty
        }
        ObjectiveKind::BalancingIndex => {
            // For each reachable total, the smallest Σψ² comes from raising
            // the lowest counts first; maximize the balancing term over totals.
            let mut at_level = vec![0u64; k as usize];
            for t in 0..state.raw.len() {
                let c = state.capped(t);
                for level in c..c + room(t) {
                    at_level[level as usize] += 1;
                }
            }
            let (kf, mf) = (f64::from(k), state.raw.len() as f64);
            let mut total = state.total;
            let mut sum_sq = state.sum_sq;
            let mut best = balancing_term(total as f64, sum_sq as f64, kf, mf);
            let mut left = units;
            'fill: for (level, &count) in at_level.iter().enumerate() {
                for _ in 0..count {
                    if left == 0 {
                        break 'fill;
                    }
                    left -= 1;
                    total += 1;
                    sum_sq += 2 * level as u64 + 1;
                    best = best.max(balancing_term(total as f64, sum_sq as f64, kf, mf));
                }
            }
            best - penalty
        }
    }
}

struct Search<'a> {
    matrix: &'a CoverageMatrix,
    spec: &'a ObjectiveSpec,
    options: SearchOptions,
    tables: SuffixTables,
    // Candidate decisions per sensor, in search order.
    candidates: Vec<Vec<Option<PanIndex>>>,
    state: Tally,
    choices: Vec<Option<PanIndex>>,
    active: usize,
    best: Option<(f64, Vec<Option<PanIndex>>)>,
    nodes: u64,
    pruned: u64,
    exhausted: bool,
    start: Instant,
}

impl<'a> Search<'a> {
    fn new(matrix: &'a CoverageMatrix, spec: &'a ObjectiveSpec, options: SearchOptions, start: Instant) -> Self {
        let candidates = (0..matrix.sensor_count())
            .map(|i| matrix.useful_pans(i).map(Some).chain([None]).collect())
            .collect();
        Self {
            matrix,
            spec,
            options,
            tables: SuffixTables::new(matrix),
            candidates,
            state: Tally::from_raw(&vec![0; matrix.target_count()], spec.k()),
            choices: vec![None; matrix.sensor_count()],
            active: 0,
            best: None,
            nodes: 0,
            pruned: 0,
            exhausted: false,
            start,
        }
    }

    fn over_budget(&mut self) -> bool {
        let budget = &self.options.budget;
        if budget.max_nodes.is_some_and(|limit| self.nodes >= limit) {
            self.exhausted = true;
        }
        if let Some(limit) = budget.max_time {
            if self.nodes.is_multiple_of(1024) && self.start.elapsed() >= limit {
                self.exhausted = true;
            }
        }
        self.exhausted
    }

    fn descend(&mut self, depth: usize) {
        if self.exhausted || self.over_budget() {
            return;
        }
        self.nodes += 1;
        let sense = self.spec.sense();

        if depth == self.matrix.sensor_count() {
            let v = self.state.value(self.spec, self.active);
            if self.best.as_ref().is_none_or(|(b, _)| beats(sense, v, *b)) {
                self.best = Some((v, self.choices.clone()));
            }
            return;
        }

        if self.options.pruning {
            if let Some((incumbent, _)) = &self.best {
                let b = bound(self.matrix, self.spec, &self.tables, &self.state, depth, self.active);
                if !beats(sense, b, *incumbent) {
                    self.pruned += 1;
                    return;
                }
            }
        }

        for c in 0..self.candidates[depth].len() {
            let choice = self.candidates[depth][c];
            self.apply(depth, choice);
            self.descend(depth + 1);
            self.undo(depth, choice);
            if self.exhausted {
                return;
            }
        }
    }

    fn apply(&mut self, sensor: usize, choice: Option<PanIndex>) {
        self.choices[sensor] = choice;
        if let Some(p) = choice {
            self.active += 1;
            for &t in self.matrix.targets_of(sensor, p) {
                self.state.bump(t);
            }
        }
    }

    fn undo(&mut self, sensor: usize, choice: Option<PanIndex>) {
        self.choices[sensor] = None;
        if let Some(p) = choice {
            self.active -= 1;
            for &t in self.matrix.targets_of(sensor, p) {
                self.state.drop_one(t);
            }
        }
    }
}
