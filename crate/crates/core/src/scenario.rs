//! Deployments of sensors and targets, seeded generation of nested scenario
//! families and the plain-text scenario file.
//!
//! File layout (schema version 1):
//!
//! ```text
//! schema_version=1
//! seed=7
//! grid_width=125
//! grid_height=125
//! sensing_range=25
//! aov_radians=0.7853981633974483
//! pan_count=8
//! sensor 12.5 40.25
//! target 3 99.125
//! ```
//!
//! Header keys must all be present, in any order, before the first point line.
//! Blank lines and `#` comments are ignored. Coordinates are written in the
//! shortest decimal form that reads back to the identical `f64`.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{coverage_matrix, CameraModel, CoverageMatrix, Point2D};

pub const SCHEMA_VERSION: u32 = 1;

/// Width and height of the deployment area; points live in `[0, w] x [0, h]`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Grid {
    pub width: f64,
    pub height: f64,
}

impl Grid {
    pub fn new(width: f64, height: f64) -> Result<Self> {
        if !(width.is_finite() && height.is_finite() && width > 0.0 && height > 0.0) {
            return Err(Error::InvalidGrid { width, height });
        }
        Ok(Self { width, height })
    }

    pub fn square(side: f64) -> Result<Self> {
        Self::new(side, side)
    }

    pub fn contains(&self, p: &Point2D) -> bool {
        p.is_finite() && (0.0..=self.width).contains(&p.x) && (0.0..=self.height).contains(&p.y)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub seed: u64,
    pub sensors: Vec<Point2D>,
    pub targets: Vec<Point2D>,
    pub camera: CameraModel,
    pub grid: Grid,
}

impl Scenario {
    /// Builds and validates a scenario.
    pub fn new(
        seed: u64,
        sensors: Vec<Point2D>,
        targets: Vec<Point2D>,
        camera: CameraModel,
        grid: Grid,
    ) -> Result<Self> {
        let s = Self {
            seed,
            sensors,
            targets,
            camera,
            grid,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        for (kind, pts) in [("sensor", &self.sensors), ("target", &self.targets)] {
            if let Some((i, p)) = pts.iter().enumerate().find(|(_, p)| !self.grid.contains(p)) {
                return Err(Error::InvalidScenario(format!(
                    "{kind} {i} at ({}, {}) lies outside the {} x {} grid",
                    p.x, p.y, self.grid.width, self.grid.height
                )));
            }
        }
        Ok(())
    }

    pub fn sensor_count(&self) -> usize {
        self.sensors.len()
    }

    pub fn target_count(&self) -> usize {
        self.targets.len()
    }

    pub fn coverage_matrix(&self) -> CoverageMatrix {
        coverage_matrix(&self.sensors, &self.targets, &self.camera)
    }

    /// Solvers need at least one sensor and one target.
    pub fn ensure_solvable(&self) -> Result<()> {
        if self.sensors.is_empty() {
            return Err(Error::EmptyScenario("no sensors"));
        }
        if self.targets.is_empty() {
            return Err(Error::EmptyScenario("no targets"));
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "schema_version={SCHEMA_VERSION}");
        let _ = writeln!(out, "seed={}", self.seed);
        let _ = writeln!(out, "grid_width={}", self.grid.width);
        let _ = writeln!(out, "grid_height={}", self.grid.height);
        let _ = writeln!(out, "sensing_range={}", self.camera.sensing_range());
        let _ = writeln!(out, "aov_radians={}", self.camera.aov());
        let _ = writeln!(out, "pan_count={}", self.camera.pan_count());
        for p in &self.sensors {
            let _ = writeln!(out, "sensor {} {}", p.x, p.y);
        }
        for p in &self.targets {
            let _ = writeln!(out, "target {} {}", p.x, p.y);
        }
        out
    }

    /// Parses the text format; `origin` only labels diagnostics.
    pub fn from_text(text: &str, origin: &Path) -> Result<Self> {
        let err = |line: usize, message: String| Error::Parse {
            path: origin.to_path_buf(),
            line,
            message,
        };

        let mut header = Header::default();
        let mut sensors = Vec::new();
        let mut targets = Vec::new();
        let mut last_line = 0;

        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            last_line = lineno;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some((key, value)) = line.split_once('=') {
                if !sensors.is_empty() || !targets.is_empty() {
                    return Err(err(lineno, format!("header key `{}` after point lines", key.trim())));
                }
                header.set(key.trim(), value.trim()).map_err(|m| err(lineno, m))?;
                continue;
            }
            let mut fields = line.split_whitespace();
            let kind = fields.next().unwrap_or_default();
            if kind == "sensor" && !targets.is_empty() {
                return Err(err(lineno, "sensor line after target lines".into()));
            }
            let list = match kind {
                "sensor" => &mut sensors,
                "target" => &mut targets,
                other => return Err(err(lineno, format!("unknown record `{other}`"))),
            };
            let x = parse_coord(fields.next(), "x").map_err(|m| err(lineno, m))?;
            let y = parse_coord(fields.next(), "y").map_err(|m| err(lineno, m))?;
            if let Some(extra) = fields.next() {
                return Err(err(lineno, format!("unexpected trailing field `{extra}`")));
            }
            list.push(Point2D::new(x, y));
        }

        let h = header.finish().map_err(|m| err(last_line, m))?;
        if h.schema_version != SCHEMA_VERSION {
            return Err(Error::SchemaVersion {
                found: h.schema_version,
                expected: SCHEMA_VERSION,
            });
        }
        let camera = CameraModel::new(h.sensing_range, h.aov_radians, h.pan_count)?;
        let grid = Grid::new(h.grid_width, h.grid_height)?;
        Scenario::new(h.seed, sensors, targets, camera, grid)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_text())?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path)?;
        Self::from_text(&text, path)
    }
}

fn parse_coord(field: Option<&str>, name: &str) -> std::result::Result<f64, String> {
    let s = field.ok_or_else(|| format!("missing {name} coordinate"))?;
    let v: f64 = s
        .parse()
        .map_err(|_| format!("{name} coordinate `{s}` is not a number"))?;
    if !v.is_finite() {
        return Err(format!("{name} coordinate `{s}` is not finite"));
    }
    Ok(v)
}

#[derive(Default)]
struct Header {
    schema_version: Option<u32>,
    seed: Option<u64>,
    grid_width: Option<f64>,
    grid_height: Option<f64>,
    sensing_range: Option<f64>,
    aov_radians: Option<f64>,
    pan_count: Option<usize>,
}

struct CompleteHeader {
    schema_version: u32,
    seed: u64,
    grid_width: f64,
    grid_height: f64,
    sensing_range: f64,
    aov_radians: f64,
    pan_count: usize,
}

impl Header {
    fn set(&mut self, key: &str, value: &str) -> std::result::Result<(), String> {
        fn parse<T: std::str::FromStr>(key: &str, value: &str) -> std::result::Result<T, String> {
            value.parse().map_err(|_| format!("bad value `{value}` for `{key}`"))
        }
        fn put<T>(slot: &mut Option<T>, key: &str, v: T) -> std::result::Result<(), String> {
            if slot.replace(v).is_some() {
                return Err(format!("duplicate key `{key}`"));
            }
            Ok(())
        }
        match key {
            "schema_version" => put(&mut self.schema_version, key, parse(key, value)?),
            "seed" => put(&mut self.seed, key, parse(key, value)?),
            "grid_width" => put(&mut self.grid_width, key, parse(key, value)?),
            "grid_height" => put(&mut self.grid_height, key, parse(key, value)?),
            "sensing_range" => put(&mut self.sensing_range, key, parse(key, value)?),
            "aov_radians" => put(&mut self.aov_radians, key, parse(key, value)?),
            "pan_count" => put(&mut self.pan_count, key, parse(key, value)?),
            other => Err(format!("unknown key `{other}`")),
        }
    }

    fn finish(self) -> std::result::Result<CompleteHeader, String> {
        fn need<T>(v: Option<T>, key: &str) -> std::result::Result<T, String> {
            v.ok_or_else(|| format!("missing header key `{key}`"))
        }
        Ok(CompleteHeader {
            schema_version: need(self.schema_version, "schema_version")?,
            seed: need(self.seed, "seed")?,
            grid_width: need(self.grid_width, "grid_width")?,
            grid_height: need(self.grid_height, "grid_height")?,
            sensing_range: need(self.sensing_range, "sensing_range")?,
            aov_radians: need(self.aov_radians, "aov_radians")?,
            pan_count: need(self.pan_count, "pan_count")?,
        })
    }
}

/// A master scenario whose prefixes form nested smaller scenarios.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioFamily {
    master: Scenario,
}

impl ScenarioFamily {
    /// Draws `n_max` sensors, then `m_max` targets, i.i.d. uniform over the
    /// grid from a ChaCha8 stream seeded with `seed`. Sensor prefixes do not
    /// depend on `m_max`.
    pub fn generate(seed: u64, n_max: usize, m_max: usize, camera: CameraModel, grid: Grid) -> Result<Self> {
        let grid = Grid::new(grid.width, grid.height)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut draw = |count: usize| -> Vec<Point2D> {
            (0..count)
                .map(|_| {
                    let x = rng.random::<f64>() * grid.width;
                    let y = rng.random::<f64>() * grid.height;
                    Point2D::new(x, y)
                })
                .collect()
        };
        let sensors = draw(n_max);
        let targets = draw(m_max);
        Ok(Self {
            master: Scenario::new(seed, sensors, targets, camera, grid)?,
        })
    }

    pub fn from_master(master: Scenario) -> Self {
        Self { master }
    }

    pub fn master(&self) -> &Scenario {
        &self.master
    }

    pub fn seed(&self) -> u64 {
        self.master.seed
    }

    /// First `n` sensors and first `m` targets of the master scenario.
    pub fn prefix(&self, n: usize, m: usize) -> Result<Scenario> {
        let (n_max, m_max) = (self.master.sensor_count(), self.master.target_count());
        if n > n_max || m > m_max {
            return Err(Error::PrefixTooLarge { n, m, n_max, m_max });
        }
        Ok(Scenario {
            seed: self.master.seed,
            sensors: self.master.sensors[..n].to_vec(),
            targets: self.master.targets[..m].to_vec(),
            camera: self.master.camera,
            grid: self.master.grid,
        })
    }
}

/// Diagnostics label for in-memory parsing.
pub fn memory_origin() -> PathBuf {
    PathBuf::from("<memory>")
}
