use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid camera model: {0}")]
    InvalidCamera(String),

    #[error("invalid grid dimensions {width} x {height}")]
    InvalidGrid { width: f64, height: f64 },

    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    #[error("prefix ({n} sensors, {m} targets) exceeds master scenario ({n_max}, {m_max})")]
    PrefixTooLarge {
        n: usize,
        m: usize,
        n_max: usize,
        m_max: usize,
    },

    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("unsupported schema_version {found} (expected {expected})")]
    SchemaVersion { found: u32, expected: u32 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("metric undefined on an empty target set")]
    EmptyTargets,

    #[error("coverage requirement k must be at least 1")]
    ZeroK,

    #[error("objective spec k = {spec} does not match coverage vector k = {coverage}")]
    KMismatch { spec: u32, coverage: u32 },

    #[error("penalty coefficient rho = {0} outside (0, 1]")]
    InvalidRho(f64),

    #[error("cannot compare a maximized value with a minimized one")]
    MixedSenses,

    #[error("default rho needs at least one sensor")]
    NoSensors,

    #[error("empty scenario: {0}")]
    EmptyScenario(&'static str),

    #[error("tie-break over an empty candidate set")]
    EmptyCandidates,

    #[error("unknown solver `{0}`")]
    UnknownSolver(String),

    #[error("invalid experiment config: {0}")]
    InvalidConfig(String),

    #[error("nothing to emit: row list is empty")]
    NoRows,

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("config: {0}")]
    Toml(#[from] toml::de::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
