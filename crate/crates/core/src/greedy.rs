//! Centralized greedy k-coverage: repeatedly switch on the inactive
//! (sensor, pan) pair with the largest incentive until no pair has a positive
//! one.
//!
//! A pair's incentive sums, over the targets it sees that are still below `k`,
//! either 1 (linear benefit) or `(k − c)² − (k − c − 1)²` (quadratic benefit,
//! `c` being the target's current count). Ties go to the lowest sensor index,
//! then the lowest pan.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{CoverageMatrix, PanIndex};
use crate::metrics::{report, Assignment, CoverageVector, SolutionReport};
use crate::objectives::ObjectiveSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BenefitMode {
    Linear,
    Quadratic,
}

impl fmt::Display for BenefitMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Self::Linear => "linear",
            Self::Quadratic => "quadratic",
        })
    }
}

impl FromStr for BenefitMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" => Ok(Self::Linear),
            "quadratic" => Ok(Self::Quadratic),
            other => Err(Error::UnknownSolver(other.to_string())),
        }
    }
}

/// Reward for one more sensor on a target currently seen `count` times.
#[inline]
pub fn increment(count: u32, k: u32, mode: BenefitMode) -> u64 {
    if count >= k {
        return 0;
    }
    match mode {
        BenefitMode::Linear => 1,
        // (k − c)² − (k − c − 1)² = 2(k − c) − 1
        BenefitMode::Quadratic => 2 * u64::from(k - count) - 1,
    }
}

/// Incentive of activating a pair that sees `phi`, given current counts.
pub fn benefit(phi: &[usize], counts: &[u32], k: u32, mode: BenefitMode) -> u64 {
    phi.iter().map(|&t| increment(counts[t], k, mode)).sum()
}

/// Picks the lowest sensor index, then the lowest pan.
pub fn tie_break(candidates: &[(usize, PanIndex)]) -> Result<(usize, PanIndex)> {
    candidates.iter().copied().min().ok_or(Error::EmptyCandidates)
}

/// One greedy iteration, recorded for tracing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreedyStep {
    pub sensor: usize,
    pub pan: PanIndex,
    pub incentive: u64,
    /// Targets covered exactly 0..k−1 times and at least k times after this step.
    pub histogram: Vec<usize>,
}

/// Running state of the greedy: activated pairs, which sensors are still
/// free, and per-target counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyState {
    pub active: Vec<(usize, PanIndex)>,
    pub inactive: Vec<bool>,
    pub counts: Vec<u32>,
}

impl GreedyState {
    fn new(matrix: &CoverageMatrix) -> Self {
        Self {
            active: Vec::new(),
            inactive: vec![true; matrix.sensor_count()],
            counts: vec![0; matrix.target_count()],
        }
    }

    fn activate(&mut self, matrix: &CoverageMatrix, sensor: usize, pan: PanIndex) {
        self.active.push((sensor, pan));
        self.inactive[sensor] = false;
        for &t in matrix.targets_of(sensor, pan) {
            self.counts[t] += 1;
        }
    }

    pub fn assignment(&self, sensor_count: usize) -> Assignment {
        Assignment::from_pairs(sensor_count, self.active.iter().copied())
    }
}

#[derive(Debug, Clone)]
pub struct GreedyOutcome {
    pub assignment: Assignment,
    pub report: SolutionReport,
    pub trace: Vec<GreedyStep>,
}

/// Runs the greedy with requirement `spec.k()`; the report's objective value
/// is scored under `spec`.
pub fn solve_greedy(matrix: &CoverageMatrix, spec: &ObjectiveSpec, mode: BenefitMode) -> Result<GreedyOutcome> {
    if matrix.sensor_count() == 0 {
        return Err(Error::EmptyScenario("no sensors"));
    }
    if matrix.target_count() == 0 {
        return Err(Error::EmptyScenario("no targets"));
    }
    let k = spec.k();
    let mut state = GreedyState::new(matrix);
    let mut trace = Vec::new();

    loop {
        let mut max_incentive = 0;
        let mut chosen = None;
        for sensor in (0..matrix.sensor_count()).filter(|&i| state.inactive[i]) {
            for pan in (0..matrix.pan_count()).map(PanIndex) {
                let incentive = benefit(matrix.targets_of(sensor, pan), &state.counts, k, mode);
                // Strict comparison keeps the first maximum in scan order.
                if incentive > max_incentive {
                    max_incentive = incentive;
                    chosen = Some((sensor, pan));
                }
            }
        }
        let Some((sensor, pan)) = chosen else { break };
        state.activate(matrix, sensor, pan);

        #[cfg(debug_assertions)]
        {
            let recount = crate::metrics::coverage_of(matrix, &state.assignment(matrix.sensor_count()), k)?;
            debug_assert_eq!(recount.raw(), state.counts.as_slice());
        }

        trace.push(GreedyStep {
            sensor,
            pan,
            incentive: max_incentive,
            histogram: CoverageVector::from_raw(state.counts.clone(), k)?.histogram(),
        });
    }

    let assignment = state.assignment(matrix.sensor_count());
    let report = report(matrix, &assignment, spec)?;
    Ok(GreedyOutcome {
        assignment,
        report,
        trace,
    })
}
