//! Sensor assignments, per-target coverage accounting and the fairness and
//! balancing indices used to rank them.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{CoverageMatrix, PanIndex};
use crate::objectives::{evaluate, ObjectiveSpec};

/// One decision per sensor: switched off, or on and facing a single pan.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Assignment {
    choices: Vec<Option<PanIndex>>,
}

impl Assignment {
    pub fn all_off(sensor_count: usize) -> Self {
        Self {
            choices: vec![None; sensor_count],
        }
    }

    pub fn from_choices(choices: Vec<Option<PanIndex>>) -> Self {
        Self { choices }
    }

    /// Assignment activating the listed `(sensor, pan)` pairs; a later pair for
    /// the same sensor replaces an earlier one.
    pub fn from_pairs(sensor_count: usize, pairs: impl IntoIterator<Item = (usize, PanIndex)>) -> Self {
        let mut a = Self::all_off(sensor_count);
        for (i, p) in pairs {
            a.choices[i] = Some(p);
        }
        a
    }

    pub fn len(&self) -> usize {
        self.choices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.choices.is_empty()
    }

    pub fn choice(&self, sensor: usize) -> Option<PanIndex> {
        self.choices[sensor]
    }

    pub fn set(&mut self, sensor: usize, choice: Option<PanIndex>) {
        self.choices[sensor] = choice;
    }

    pub fn choices(&self) -> &[Option<PanIndex>] {
        &self.choices
    }

    pub fn active_count(&self) -> usize {
        self.choices.iter().filter(|c| c.is_some()).count()
    }

    pub fn active(&self) -> impl Iterator<Item = (usize, PanIndex)> + '_ {
        self.choices.iter().enumerate().filter_map(|(i, c)| c.map(|p| (i, p)))
    }

    /// Position of this assignment in the exact solver's search order: sensors
    /// in index order, pans ascending, Off last.
    pub fn search_rank(&self, pan_count: usize) -> Vec<usize> {
        self.choices
            .iter()
            .map(|c| c.map_or(pan_count, PanIndex::index))
            .collect()
    }

    /// One `sensor pan` or `sensor off` line per sensor.
    pub fn to_text(&self) -> String {
        self.choices
            .iter()
            .enumerate()
            .map(|(i, c)| match c {
                Some(p) => format!("{i} {}\n", p.index()),
                None => format!("{i} off\n"),
            })
            .collect()
    }

    pub fn from_text(text: &str, origin: &Path, pan_count: usize) -> Result<Self> {
        let err = |line: usize, message: String| Error::Parse {
            path: origin.to_path_buf(),
            line,
            message,
        };
        let mut choices = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split_whitespace();
            let sensor: usize = fields
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| err(idx + 1, "expected a sensor index".into()))?;
            if sensor != choices.len() {
                return Err(err(
                    idx + 1,
                    format!("expected sensor {}, found {sensor}", choices.len()),
                ));
            }
            let choice = match fields.next() {
                Some("off") => None,
                Some(s) => {
                    let p: usize = s.parse().map_err(|_| err(idx + 1, format!("bad pan `{s}`")))?;
                    if p >= pan_count {
                        return Err(err(idx + 1, format!("pan {p} out of range for {pan_count} pans")));
                    }
                    Some(PanIndex(p))
                }
                None => return Err(err(idx + 1, "missing pan or `off`".into())),
            };
            if let Some(extra) = fields.next() {
                return Err(err(idx + 1, format!("unexpected trailing field `{extra}`")));
            }
            choices.push(choice);
        }
        Ok(Self { choices })
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.choices.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match c {
                Some(p) => write!(f, "{}", p.index())?,
                None => f.write_str("-")?,
            }
        }
        Ok(())
    }
}

/// Raw per-target coverage counts and the same counts capped at `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageVector {
    raw: Vec<u32>,
    capped: Vec<u32>,
    k: u32,
}

impl CoverageVector {
    pub fn from_raw(raw: Vec<u32>, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroK);
        }
        let capped = raw.iter().map(|&c| c.min(k)).collect();
        Ok(Self { raw, capped, k })
    }

    pub fn raw(&self) -> &[u32] {
        &self.raw
    }

    pub fn capped(&self) -> &[u32] {
        &self.capped
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn target_count(&self) -> usize {
        self.raw.len()
    }

    /// Sum of capped counts.
    pub fn total(&self) -> u64 {
        self.capped.iter().map(|&c| u64::from(c)).sum()
    }

    pub fn sum_of_squares(&self) -> u64 {
        self.capped.iter().map(|&c| u64::from(c) * u64::from(c)).sum()
    }

    pub fn uncovered(&self) -> usize {
        self.raw.iter().filter(|&&c| c == 0).count()
    }

    /// Number of targets seen exactly 0, 1, ..., k-1 times, then at least k
    /// times (uncapped counts).
    pub fn histogram(&self) -> Vec<usize> {
        let k = self.k as usize;
        let mut h = vec![0; k + 1];
        for &c in &self.raw {
            h[(c as usize).min(k)] += 1;
        }
        h
    }
}

/// Per-target coverage of `assignment`, capped at `k`.
pub fn coverage_of(matrix: &CoverageMatrix, assignment: &Assignment, k: u32) -> Result<CoverageVector> {
    if assignment.len() != matrix.sensor_count() {
        return Err(Error::DimensionMismatch(format!(
            "assignment has {} sensors, matrix has {}",
            assignment.len(),
            matrix.sensor_count()
        )));
    }
    let mut raw = vec![0u32; matrix.target_count()];
    for (i, pan) in assignment.active() {
        if pan.index() >= matrix.pan_count() {
            return Err(Error::DimensionMismatch(format!(
                "sensor {i} uses pan {} of {}",
                pan.index(),
                matrix.pan_count()
            )));
        }
        for &t in matrix.targets_of(i, pan) {
            raw[t] += 1;
        }
    }
    CoverageVector::from_raw(raw, k)
}

/// Jain's index over a count vector; 0 when every count is 0.
pub fn jain_index(counts: &[u32]) -> Result<f64> {
    if counts.is_empty() {
        return Err(Error::EmptyTargets);
    }
    let sum: f64 = counts.iter().map(|&c| f64::from(c)).sum();
    let sq: f64 = counts.iter().map(|&c| f64::from(c) * f64::from(c)).sum();
    if sq == 0.0 {
        return Ok(0.0);
    }
    Ok(sum * sum / (counts.len() as f64 * sq))
}

/// Fairness index of the capped counts.
pub fn fairness_index(coverage: &CoverageVector) -> Result<f64> {
    jain_index(coverage.capped())
}

/// Fairness index scaled by achieved over attainable coverage, `Σψ / (k m)`.
pub fn balancing_index(coverage: &CoverageVector) -> Result<f64> {
    let fi = fairness_index(coverage)?;
    let attainable = f64::from(coverage.k()) * coverage.target_count() as f64;
    Ok(fi * coverage.total() as f64 / attainable)
}

/// Everything a sweep row or a single solve reports about an assignment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionReport {
    pub coverage: CoverageVector,
    pub active_sensor_count: usize,
    pub fairness_index: f64,
    pub balancing_index: f64,
    pub objective_value: f64,
    pub histogram: Vec<usize>,
}

impl SolutionReport {
    pub fn uncovered_fraction(&self) -> f64 {
        self.coverage.uncovered() as f64 / self.coverage.target_count() as f64
    }

    /// Flat `key=value` pairs, histogram levels as `level_0 .. level_{k}plus`.
    pub fn to_record(&self) -> Vec<(String, String)> {
        let mut rec = vec![
            ("targets".to_string(), self.coverage.target_count().to_string()),
            ("k".to_string(), self.coverage.k().to_string()),
            ("active_sensors".to_string(), self.active_sensor_count.to_string()),
            ("total_coverage".to_string(), self.coverage.total().to_string()),
            ("fairness_index".to_string(), format!("{:.6}", self.fairness_index)),
            ("balancing_index".to_string(), format!("{:.6}", self.balancing_index)),
            ("objective_value".to_string(), format!("{:.6}", self.objective_value)),
        ];
        rec.extend(
            histogram_labels(self.coverage.k())
                .into_iter()
                .zip(self.histogram.iter().map(ToString::to_string)),
        );
        rec
    }
}

pub(crate) fn histogram_labels(k: u32) -> Vec<String> {
    (0..=k)
        .map(|l| {
            if l == k {
                format!("level_{l}plus")
            } else {
                format!("level_{l}")
            }
        })
        .collect()
}

pub fn report(matrix: &CoverageMatrix, assignment: &Assignment, spec: &ObjectiveSpec) -> Result<SolutionReport> {
    let coverage = coverage_of(matrix, assignment, spec.k())?;
    if coverage.target_count() == 0 {
        return Err(Error::EmptyTargets);
    }
    let active = assignment.active_count();
    let objective = evaluate(spec, &coverage, active)?;
    Ok(SolutionReport {
        active_sensor_count: active,
        fairness_index: fairness_index(&coverage)?,
        balancing_index: balancing_index(&coverage)?,
        objective_value: objective.value,
        histogram: coverage.histogram(),
        coverage,
    })
}
