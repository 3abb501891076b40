//! Pan-only camera model, the target-in-sector test and the binary coverage
//! matrix built from it.
//!
//! Pans tile the circle: pan `j` of every camera is the half-open angular
//! interval `[j * aov, (j + 1) * aov)`, measured counterclockwise from the
//! positive x-axis. Because the intervals are disjoint, a target in range of a
//! sensor is seen by exactly one of its pans. A target sitting exactly on the
//! sensor position is seen by every pan.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance on `pan_count * aov == 2π`.
pub const AOV_TOLERANCE: f64 = 1e-9;

/// Slack added to the sensing range so boundary targets classify the same way
/// on every platform.
pub const RANGE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2D {
    pub x: f64,
    pub y: f64,
}

impl Point2D {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn distance(&self, other: &Point2D) -> f64 {
        (other.x - self.x).hypot(other.y - self.y)
    }
}

/// Index of one of the `pan_count` orientations a camera can take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PanIndex(pub usize);

impl PanIndex {
    pub fn index(self) -> usize {
        self.0
    }
}

/// Homogeneous camera parameters shared by every sensor of a scenario.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CameraModel {
    sensing_range: f64,
    aov: f64,
    pan_count: usize,
}

impl CameraModel {
    /// Camera whose `pan_count` pans tile the circle; the angle of view is
    /// derived as `2π / pan_count`.
    pub fn with_pans(sensing_range: f64, pan_count: usize) -> Result<Self> {
        if pan_count == 0 {
            return Err(Error::InvalidCamera("pan_count must be positive".into()));
        }
        Self::new(sensing_range, TAU / pan_count as f64, pan_count)
    }

    /// Camera from an angle of view; the pan count is `round(2π / aov)`.
    pub fn with_aov(sensing_range: f64, aov: f64) -> Result<Self> {
        if !(aov.is_finite() && aov > 0.0) {
            return Err(Error::InvalidCamera(format!("aov must be positive, got {aov}")));
        }
        let pans = (TAU / aov).round();
        if pans < 1.0 {
            return Err(Error::InvalidCamera(format!("aov {aov} wider than a full turn")));
        }
        Self::new(sensing_range, aov, pans as usize)
    }

    /// Fully explicit constructor; checks that the pans tile the circle.
    pub fn new(sensing_range: f64, aov: f64, pan_count: usize) -> Result<Self> {
        if !(sensing_range.is_finite() && sensing_range > 0.0) {
            return Err(Error::InvalidCamera(format!(
                "sensing range must be positive, got {sensing_range}"
            )));
        }
        if !(aov.is_finite() && aov > 0.0) {
            return Err(Error::InvalidCamera(format!("aov must be positive, got {aov}")));
        }
        if pan_count == 0 {
            return Err(Error::InvalidCamera("pan_count must be positive".into()));
        }
        if (pan_count as f64 * aov - TAU).abs() > AOV_TOLERANCE {
            return Err(Error::InvalidCamera(format!(
                "{pan_count} pans of {aov} rad do not tile the circle"
            )));
        }
        Ok(Self {
            sensing_range,
            aov,
            pan_count,
        })
    }

    pub fn sensing_range(&self) -> f64 {
        self.sensing_range
    }

    pub fn aov(&self) -> f64 {
        self.aov
    }

    pub fn pan_count(&self) -> usize {
        self.pan_count
    }

    pub fn pans(&self) -> impl Iterator<Item = PanIndex> {
        (0..self.pan_count).map(PanIndex)
    }

    /// Lower and upper bound of a pan's angular interval. The last pan is
    /// closed off at exactly 2π so every normalized angle lands in a pan.
    pub fn pan_interval(&self, pan: PanIndex) -> (f64, f64) {
        let j = pan.index();
        let lo = j as f64 * self.aov;
        let hi = if j + 1 == self.pan_count {
            TAU
        } else {
            (j + 1) as f64 * self.aov
        };
        (lo, hi)
    }

    /// Direction the camera faces when set to `pan` (the sector bisector).
    pub fn pan_center(&self, pan: PanIndex) -> f64 {
        (pan.index() as f64 + 0.5) * self.aov
    }

    /// Pan containing polar angle `angle` (expected in `[0, 2π)`).
    pub fn pan_of_angle(&self, angle: f64) -> PanIndex {
        // Start from the arithmetic guess and correct against the exact
        // interval bounds so this agrees with `pan_interval`.
        let mut j = ((angle / self.aov).floor().max(0.0) as usize).min(self.pan_count - 1);
        loop {
            let (lo, hi) = self.pan_interval(PanIndex(j));
            if angle < lo && j > 0 {
                j -= 1;
            } else if angle >= hi && j + 1 < self.pan_count {
                j += 1;
            } else {
                return PanIndex(j);
            }
        }
    }
}

/// Polar angle of `v` normalized to `[0, 2π)`.
pub fn polar_angle(dx: f64, dy: f64) -> f64 {
    let a = dy.atan2(dx);
    if a >= 0.0 {
        return a;
    }
    let wrapped = a + TAU;
    if wrapped >= TAU {
        // -tiny + 2π rounds up to 2π; keep it inside the last pan.
        f64::from_bits(TAU.to_bits() - 1)
    } else {
        wrapped
    }
}

/// Target-in-sector test: is `target` inside the sector the camera at
/// `sensor` sweeps when set to `pan`?
pub fn target_in_sector(sensor: Point2D, pan: PanIndex, camera: &CameraModel, target: Point2D) -> bool {
    debug_assert!(pan.index() < camera.pan_count());
    let dx = target.x - sensor.x;
    let dy = target.y - sensor.y;
    if dx == 0.0 && dy == 0.0 {
        return true;
    }
    if dx.hypot(dy) > camera.sensing_range() + RANGE_TOLERANCE {
        return false;
    }
    let angle = polar_angle(dx, dy);
    let (lo, hi) = camera.pan_interval(pan);
    lo <= angle && angle < hi
}

/// Binary tensor `bits[sensor][pan][target]` plus the derived per-(sensor,
/// pan) target lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageMatrix {
    sensor_count: usize,
    target_count: usize,
    pan_count: usize,
    bits: Vec<bool>,
    // Sorted target indices per (sensor, pan), row-major.
    sets: Vec<Vec<usize>>,
}

impl CoverageMatrix {
    /// Builds a matrix directly from target sets, indexed `[sensor][pan]`.
    /// Useful for hand-made instances that have no geometric layout.
    pub fn from_sets(target_count: usize, pan_count: usize, sets: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let sensor_count = sets.len();
        let mut bits = vec![false; sensor_count * pan_count * target_count];
        let mut flat = Vec::with_capacity(sensor_count * pan_count);
        for (i, pans) in sets.into_iter().enumerate() {
            if pans.len() != pan_count {
                return Err(Error::DimensionMismatch(format!(
                    "sensor {i} lists {} pans, expected {pan_count}",
                    pans.len()
                )));
            }
            for (j, mut targets) in pans.into_iter().enumerate() {
                targets.sort_unstable();
                targets.dedup();
                for &t in &targets {
                    if t >= target_count {
                        return Err(Error::DimensionMismatch(format!(
                            "target {t} out of range for {target_count} targets"
                        )));
                    }
                    bits[(i * pan_count + j) * target_count + t] = true;
                }
                flat.push(targets);
            }
        }
        Ok(Self {
            sensor_count,
            target_count,
            pan_count,
            bits,
            sets: flat,
        })
    }

    pub fn sensor_count(&self) -> usize {
        self.sensor_count
    }

    pub fn target_count(&self) -> usize {
        self.target_count
    }

    pub fn pan_count(&self) -> usize {
        self.pan_count
    }

    pub fn get(&self, sensor: usize, pan: PanIndex, target: usize) -> bool {
        self.bits[(sensor * self.pan_count + pan.index()) * self.target_count + target]
    }

    /// Targets seen by `sensor` at `pan`, in ascending order.
    pub fn targets_of(&self, sensor: usize, pan: PanIndex) -> &[usize] {
        &self.sets[sensor * self.pan_count + pan.index()]
    }

    /// Pans of `sensor` that see at least one target.
    pub fn useful_pans(&self, sensor: usize) -> impl Iterator<Item = PanIndex> + '_ {
        (0..self.pan_count)
            .map(PanIndex)
            .filter(move |&p| !self.targets_of(sensor, p).is_empty())
    }
}

/// Coverage matrix of a set of sensors and targets under one camera model.
/// Each entry is decided by [`target_in_sector`].
pub fn coverage_matrix(sensors: &[Point2D], targets: &[Point2D], camera: &CameraModel) -> CoverageMatrix {
    let (n, m, q) = (sensors.len(), targets.len(), camera.pan_count());
    let mut bits = vec![false; n * q * m];
    let mut sets = vec![Vec::new(); n * q];
    for (i, &s) in sensors.iter().enumerate() {
        for pan in camera.pans() {
            let row = i * q + pan.index();
            for (t, &g) in targets.iter().enumerate() {
                if target_in_sector(s, pan, camera, g) {
                    bits[row * m + t] = true;
                    sets[row].push(t);
                }
            }
        }
    }
    CoverageMatrix {
        sensor_count: n,
        target_count: m,
        pan_count: q,
        bits,
        sets,
    }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::FRAC_PI_4;

    use proptest::prelude::*;

    use super::*;

    fn cam() -> CameraModel {
        CameraModel::with_aov(25.0, FRAC_PI_4).unwrap()
    }

    #[test]
    fn tis_examples() {
        let o = Point2D::new(0.0, 0.0);
        assert!(target_in_sector(o, PanIndex(0), &cam(), Point2D::new(10.0, 0.0)));
        assert!(!target_in_sector(o, PanIndex(0), &cam(), Point2D::new(26.0, 0.0)));
        for pan in cam().pans() {
            assert!(target_in_sector(o, pan, &cam(), o));
        }
        // Exactly on the boundary between pan 0 and pan 1.
        assert!(target_in_sector(o, PanIndex(1), &cam(), Point2D::new(10.0, 10.0)));
        assert!(!target_in_sector(o, PanIndex(0), &cam(), Point2D::new(10.0, 10.0)));
    }

    #[test]
    fn range_boundary_is_inclusive() {
        let o = Point2D::new(0.0, 0.0);
        assert!(target_in_sector(o, PanIndex(2), &cam(), Point2D::new(0.0, 25.0)));
        assert!(!target_in_sector(
            o,
            PanIndex(2),
            &cam(),
            Point2D::new(0.0, 25.0 + 1e-6)
        ));
    }

    #[test]
    fn negative_zero_and_just_below_the_axis() {
        let o = Point2D::new(0.0, 0.0);
        assert!(target_in_sector(o, PanIndex(0), &cam(), Point2D::new(5.0, -0.0)));
        assert!(target_in_sector(o, PanIndex(7), &cam(), Point2D::new(5.0, -1e-300)));
    }

    #[test]
    fn camera_validation() {
        assert!(CameraModel::new(25.0, FRAC_PI_4, 7).is_err());
        assert!(CameraModel::new(0.0, FRAC_PI_4, 8).is_err());
        assert!(CameraModel::new(-1.0, FRAC_PI_4, 8).is_err());
        assert!(CameraModel::with_aov(25.0, 0.0).is_err());
        assert!(CameraModel::with_pans(25.0, 0).is_err());
        assert_eq!(cam().pan_count(), 8);
        assert_eq!(CameraModel::with_pans(25.0, 6).unwrap().aov(), TAU / 6.0);
    }

    #[test]
    fn single_sensor_matrix() {
        let mx = coverage_matrix(&[Point2D::new(0.0, 0.0)], &[Point2D::new(10.0, 0.0)], &cam());
        assert!(mx.get(0, PanIndex(0), 0));
        for j in 1..8 {
            assert!(!mx.get(0, PanIndex(j), 0));
        }
        assert_eq!(mx.targets_of(0, PanIndex(0)), &[0]);
        assert!(mx.targets_of(0, PanIndex(4)).is_empty());
        assert_eq!(mx.useful_pans(0).collect::<Vec<_>>(), vec![PanIndex(0)]);
    }

    #[test]
    fn empty_target_set() {
        let mx = coverage_matrix(&[Point2D::new(1.0, 1.0), Point2D::new(2.0, 2.0)], &[], &cam());
        assert_eq!(mx.target_count(), 0);
        for i in 0..2 {
            for p in cam().pans() {
                assert!(mx.targets_of(i, p).is_empty());
            }
        }
    }

    #[test]
    fn from_sets_rejects_bad_shapes() {
        assert!(CoverageMatrix::from_sets(2, 2, vec![vec![vec![0]]]).is_err());
        assert!(CoverageMatrix::from_sets(2, 1, vec![vec![vec![5]]]).is_err());
        let mx = CoverageMatrix::from_sets(3, 2, vec![vec![vec![2, 0, 2], vec![]]]).unwrap();
        assert_eq!(mx.targets_of(0, PanIndex(0)), &[0, 2]);
    }

    #[test]
    fn pan_of_angle_agrees_with_intervals() {
        let c = CameraModel::with_pans(1.0, 7).unwrap();
        for k in 0..10_000 {
            let a = k as f64 / 10_000.0 * TAU;
            let p = c.pan_of_angle(a);
            let (lo, hi) = c.pan_interval(p);
            assert!(lo <= a && a < hi, "{a} not in pan {p:?}");
        }
    }

    fn point() -> impl Strategy<Value = Point2D> {
        (0.0..60.0f64, 0.0..60.0f64).prop_map(|(x, y)| Point2D::new(x, y))
    }

    proptest! {
        #[test]
        fn at_most_one_pan_per_pair(sensors in prop::collection::vec(point(), 1..6),
                                    targets in prop::collection::vec(point(), 0..10)) {
            let mx = coverage_matrix(&sensors, &targets, &cam());
            for (i, s) in sensors.iter().enumerate() {
                for (t, g) in targets.iter().enumerate() {
                    let hits = cam().pans().filter(|&p| mx.get(i, p, t)).count();
                    let in_range = s.distance(g) <= 25.0 + RANGE_TOLERANCE;
                    if s == g {
                        prop_assert_eq!(hits, 8);
                    } else {
                        prop_assert_eq!(hits, usize::from(in_range));
                    }
                }
            }
        }

        #[test]
        fn matrix_agrees_with_tis(sensors in prop::collection::vec(point(), 1..5),
                                  targets in prop::collection::vec(point(), 1..6)) {
            let mx = coverage_matrix(&sensors, &targets, &cam());
            for (i, &s) in sensors.iter().enumerate() {
                for p in cam().pans() {
                    let expect: Vec<usize> = targets.iter().enumerate()
                        .filter(|(_, &g)| target_in_sector(s, p, &cam(), g))
                        .map(|(t, _)| t)
                        .collect();
                    prop_assert_eq!(mx.targets_of(i, p), expect.as_slice());
                }
            }
        }
    }
}
