//! Balanced k-coverage for networks of pan-only directional cameras.
//!
//! Every camera can be switched off or turned toward one of `q` disjoint pans.
//! The goal is to cover each target by `k` active cameras, and when that is
//! impossible to spread coverage as evenly as possible while keeping few
//! cameras on. The crate provides:
//!
//! - [`geometry`]: camera model, target-in-sector test, coverage matrix.
//! - [`scenario`]: deployments, seeded nested scenario families, file I/O.
//! - [`metrics`]: assignments, coverage counts, fairness and balancing index.
//! - [`objectives`]: coverage-max, vector-distance and balancing-index scores.
//! - [`exact`]: branch and bound that finds the optimum of any objective.
//! - [`greedy`]: the centralized greedy heuristic with linear or quadratic benefit.
//! - [`harness`]: sweeps over scenario sizes with CSV / JSON-lines output.
//!
//! ```
//! use vsn_kcover::prelude::*;
//!
//! let camera = CameraModel::with_pans(25.0, 8).unwrap();
//! let family = ScenarioFamily::generate(7, 6, 10, camera, Grid::square(50.0).unwrap()).unwrap();
//! let matrix = family.master().coverage_matrix();
//! let spec = ObjectiveSpec::new(ObjectiveKind::BalancingIndex, 2, 1e-3).unwrap();
//!
//! let exact = solve_exact(&matrix, &spec, SearchBudget::unlimited()).unwrap();
//! let greedy = solve_greedy(&matrix, &spec, BenefitMode::Quadratic).unwrap();
//! assert!(exact.report.balancing_index + 1e-2 >= greedy.report.balancing_index);
//! ```

pub mod error;
pub mod exact;
pub mod geometry;
pub mod greedy;
pub mod harness;
pub mod metrics;
pub mod objectives;
pub mod scenario;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::error::{Error, Result};
    pub use crate::exact::{solve_exact, ExactSolution, SearchBudget, SearchStats};
    pub use crate::geometry::{coverage_matrix, target_in_sector, CameraModel, CoverageMatrix, PanIndex, Point2D};
    pub use crate::greedy::{solve_greedy, BenefitMode, GreedyOutcome};
    pub use crate::harness::{run_sweep, ExperimentConfig, ResultRow, Rho, SolverKind, SweepAxis};
    pub use crate::metrics::{
        balancing_index, coverage_of, fairness_index, report, Assignment, CoverageVector, SolutionReport,
    };
    pub use crate::objectives::{default_rho, evaluate, ObjectiveKind, ObjectiveSpec, ObjectiveValue, Sense};
    pub use crate::scenario::{Grid, Scenario, ScenarioFamily};
}
