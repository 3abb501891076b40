//! Exact optimum of each objective next to both greedy variants on one
//! instance, with search statistics.

use vsn_kcover::exact::enumerate_exhaustive;
use vsn_kcover::prelude::*;

fn main() -> vsn_kcover::Result<()> {
    let camera = CameraModel::with_pans(25.0, 8)?;
    let family = ScenarioFamily::generate(11, 7, 14, camera, Grid::square(50.0)?)?;
    let matrix = family.master().coverage_matrix();
    let k = 2;

    for kind in ObjectiveKind::ALL {
        let spec = ObjectiveSpec::new(kind, k, 1e-4)?;
        let sol = solve_exact(&matrix, &spec, SearchBudget::unlimited())?;
        let (_, brute) = enumerate_exhaustive(&matrix, &spec)?;
        println!(
            "{kind}-exact  BI {:.4} uncovered {:.3}  value {:.6} (enumeration {brute:.6})  nodes {} pruned {}  [{}]",
            sol.report.balancing_index,
            sol.report.uncovered_fraction(),
            sol.report.objective_value,
            sol.stats.nodes_explored,
            sol.stats.nodes_pruned,
            sol.assignment
        );
    }

    let spec = ObjectiveSpec::new(ObjectiveKind::BalancingIndex, k, 1e-4)?;
    for mode in [BenefitMode::Linear, BenefitMode::Quadratic] {
        let out = solve_greedy(&matrix, &spec, mode)?;
        println!(
            "greedy-{mode}  BI {:.4} uncovered {:.3}  [{}]",
            out.report.balancing_index,
            out.report.uncovered_fraction(),
            out.assignment
        );
    }
    Ok(())
}
