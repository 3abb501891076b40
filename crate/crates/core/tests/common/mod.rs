#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vsn_kcover::prelude::*;

/// A small dense deployment: sensors and targets drawn on a `side`×`side`
/// grid with range 25 and 8 pans.
pub fn dense_instance(seed: u64, n: usize, m: usize, side: f64) -> Scenario {
    let camera = CameraModel::with_pans(25.0, 8).unwrap();
    ScenarioFamily::generate(seed, n, m, camera, Grid::square(side).unwrap())
        .unwrap()
        .master()
        .clone()
}

/// Random (n, m, k, side) drawn from the small-instance ranges used by the
/// brute-force comparisons.
pub fn random_shape(rng: &mut ChaCha8Rng) -> (usize, usize, u32, f64) {
    let n = rng.random_range(1..=6);
    let m = rng.random_range(1..=10);
    let k = rng.random_range(1..=3);
    let side = [10.0, 20.0, 35.0, 50.0][rng.random_range(0..4)];
    (n, m, k, side)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every assignment of `n` sensors to {off, pan 0..q}, as mixed-radix digits.
pub fn all_assignments(n: usize, q: usize) -> impl Iterator<Item = Vec<Option<usize>>> {
    let total = (q + 1).pow(n as u32);
    (0..total).map(move |mut code| {
        (0..n)
            .map(|_| {
                let d = code % (q + 1);
                code /= q + 1;
                (d < q).then_some(d)
            })
            .collect()
    })
}

/// Raw per-target counts of a digit assignment, read straight from the matrix bits.
pub fn raw_counts(matrix: &CoverageMatrix, choice: &[Option<usize>]) -> Vec<u32> {
    (0..matrix.target_count())
        .map(|t| {
            choice
                .iter()
                .enumerate()
                .filter(|(i, c)| c.is_some_and(|j| matrix.get(*i, PanIndex(j), t)))
                .count() as u32
        })
        .collect()
}

/// Objective value written out from the three formulas directly.
pub fn objective_by_formula(kind: ObjectiveKind, k: u32, rho: f64, raw: &[u32], active: usize) -> f64 {
    let psi: Vec<f64> = raw.iter().map(|&x| f64::from(x.min(k))).collect();
    let kf = f64::from(k);
    let m = psi.len() as f64;
    let a = active as f64;
    match kind {
        ObjectiveKind::CoverageMax => psi.iter().sum::<f64>() - rho * a,
        ObjectiveKind::VectorDistance => psi.iter().map(|p| (kf - p) * (kf - p)).sum::<f64>() + rho * a,
        ObjectiveKind::BalancingIndex => {
            let s: f64 = psi.iter().sum();
            let s2: f64 = psi.iter().map(|p| p * p).sum();
            let term = if s == 0.0 { 0.0 } else { s.powi(3) / (kf * m * m * s2) };
            term - rho * a
        }
    }
}

/// Best objective value over all assignments, computed without the library's
/// evaluation code.
pub fn brute_force_optimum(matrix: &CoverageMatrix, kind: ObjectiveKind, k: u32, rho: f64) -> f64 {
    let maximize = kind.sense() == Sense::Maximize;
    let mut best = if maximize { f64::NEG_INFINITY } else { f64::INFINITY };
    for choice in all_assignments(matrix.sensor_count(), matrix.pan_count()) {
        let active = choice.iter().filter(|c| c.is_some()).count();
        let v = objective_by_formula(kind, k, rho, &raw_counts(matrix, &choice), active);
        if (maximize && v > best) || (!maximize && v < best) {
            best = v;
        }
    }
    best
}
